#include "poncelet/error.hpp"

namespace poncelet {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::not_an_ellipse: return "NotAnEllipse";
    case Errc::degenerate: return "Degenerate";
    case Errc::coincident_points: return "CoincidentPoints";
    case Errc::not_on_conic: return "NotOnConic";
    case Errc::singular_point: return "SingularPoint";
    case Errc::degenerate_conic: return "DegenerateConic";
    case Errc::pole_input: return "PoleInput";
    case Errc::not_unimodular: return "NotUnimodular";
    case Errc::root_quality_failure: return "RootQualityFailure";
    case Errc::zero_input: return "ZeroInput";
    case Errc::inside_ellipse: return "InsideEllipse";
    case Errc::not_on_boundary: return "NotOnBoundary";
    case Errc::coincident_foci: return "CoincidentFoci";
    case Errc::complex_roots: return "ComplexRoots";
    case Errc::antipodal_points: return "AntipodalPoints";
    case Errc::inside_parabola: return "InsideParabola";
    case Errc::modulus_out_of_range: return "ModulusOutOfRange";
    case Errc::no_convergence: return "NoConvergence";
    case Errc::branch_point_input: return "BranchPointInput";
    case Errc::domain_violation: return "DomainViolation";
    case Errc::singular_inner: return "SingularInner";
    case Errc::no_tangent: return "NoTangent";
    case Errc::not_contained: return "NotContained";
    case Errc::rank_deficient: return "RankDeficient";
  }
  return "Unknown";
}

}  // namespace poncelet
