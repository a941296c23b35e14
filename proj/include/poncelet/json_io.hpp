#pragma once

// JSON encodings: complex numbers as [re, im], conics and lines as objects.

#include <complex>

#include <json.hpp>

#include "poncelet/conic.hpp"

namespace nlohmann {

template <>
struct adl_serializer<std::complex<double>> {
  static void to_json(json& j, const std::complex<double>& z) { j = json::array({z.real(), z.imag()}); }
  static void from_json(const json& j, std::complex<double>& z) {
    z = {j.at(0).get<double>(), j.at(1).get<double>()};
  }
};

}  // namespace nlohmann

namespace poncelet {

inline void to_json(nlohmann::json& j, const ConicGeneral& c) {
  j = {{"u", c.u}, {"p", c.p}, {"v", c.v}, {"q", c.q}};
}
inline void from_json(const nlohmann::json& j, ConicGeneral& c) {
  c.u = j.at("u").get<cplx>();
  c.p = j.at("p").get<double>();
  c.v = j.at("v").get<cplx>();
  c.q = j.at("q").get<double>();
}

inline void to_json(nlohmann::json& j, const EllipseStandard& e) { j = {{"f1", e.f1}, {"f2", e.f2}, {"r", e.r}}; }
inline void from_json(const nlohmann::json& j, EllipseStandard& e) {
  e.f1 = j.at("f1").get<cplx>();
  e.f2 = j.at("f2").get<cplx>();
  e.r = j.at("r").get<double>();
}

inline void to_json(nlohmann::json& j, const RealLine& l) { j = {{"beta", l.beta()}, {"gamma", l.gamma()}}; }

}  // namespace poncelet
