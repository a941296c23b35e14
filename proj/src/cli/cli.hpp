#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "poncelet/blaschke.hpp"
#include "poncelet/conic.hpp"

namespace poncelet::cli {

enum class ExitCode : int { ok = 0, internal = 1, validation = 2, verification_failed = 3 };

struct BoundarySpec {
  enum class Kind { disk, ellipse, parabola, jacobi };
  Kind kind = Kind::disk;
  double param = 0.0;

  std::string to_string() const;
};

struct JobConfig {
  BoundarySpec boundary;
  std::vector<cplx> zeros;
  std::optional<double> theta;
  int samples = 360;
  std::optional<double> tol;
  std::string out_dir = ".";
  std::set<std::string> formats{"json", "csv"};
  std::uint64_t seed = 1;
  int threads = 1;
  double inner_scale = 1.0;
  std::set<std::string> checks{"all"};
  std::optional<cplx> center;
  std::optional<double> radius;
};

/// Parses "a+bi", "a-bi", "a", "bi", "i", "-i" with no spaces.
cplx parse_complex(std::string_view text);
/// Comma-separated list of parse_complex values.
std::vector<cplx> parse_complex_list(std::string_view text);
/// "disk", "ellipse:t", "parabola:t" or "jacobi:p"; parameters are range-checked.
BoundarySpec parse_boundary(std::string_view text);
std::set<std::string> parse_formats(std::string_view text);
/// PONCELET_KIT_THREADS if set and positive, else the hardware concurrency.
int thread_limit_from_env();

/// The boundary curve as a conic and as a map from the unit circle onto it.
struct Boundary {
  BoundarySpec spec;
  ConicGeneral conic;
  std::function<cplx(cplx)> map;
  /// Closed-form interior curve for a degree-3 product, if the boundary has one.
  std::function<ConicGeneral(const BlaschkeProduct&)> interior;
};

Boundary make_boundary(const BoundarySpec& spec);
BlaschkeProduct make_product(const JobConfig& cfg);

struct CommandResult {
  nlohmann::json report;
  ExitCode code = ExitCode::ok;
};

CommandResult cmd_interior_curve(const JobConfig& cfg);
CommandResult cmd_exterior_curve(const JobConfig& cfg);
CommandResult cmd_centroid_locus(const JobConfig& cfg);
CommandResult cmd_verify(const JobConfig& cfg);
CommandResult cmd_cayley(const JobConfig& cfg);
CommandResult cmd_jacobi_experiment(const JobConfig& cfg);

/// Full command-line entry point. The JSON report goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace poncelet::cli
