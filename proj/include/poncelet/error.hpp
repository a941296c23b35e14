#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace poncelet {

enum class Errc {
  invalid_argument,
  not_an_ellipse,
  degenerate,
  coincident_points,
  not_on_conic,
  singular_point,
  degenerate_conic,
  pole_input,
  not_unimodular,
  root_quality_failure,
  zero_input,
  inside_ellipse,
  not_on_boundary,
  coincident_foci,
  complex_roots,
  antipodal_points,
  inside_parabola,
  modulus_out_of_range,
  no_convergence,
  branch_point_input,
  domain_violation,
  singular_inner,
  no_tangent,
  not_contained,
  rank_deficient,
};

std::string_view to_string(Errc code) noexcept;

// All library failures are reported as Error; code() identifies the contract
// that was violated.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace poncelet
