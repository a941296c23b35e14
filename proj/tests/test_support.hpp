#pragma once

#include <optional>

#include "poncelet/error.hpp"

// Code of the Error thrown by f, or nullopt if it returns normally.
template <typename F>
std::optional<poncelet::Errc> error_code(F&& f) {
  try {
    f();
  } catch (const poncelet::Error& e) {
    return e.code();
  }
  return std::nullopt;
}
