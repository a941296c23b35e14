#include <iostream>

#include <CLI11.hpp>

#include "cli.hpp"
#include "poncelet/error.hpp"

namespace poncelet::cli {

namespace {

struct RawOptions {
  std::string boundary;
  std::string zeros;
  std::optional<double> theta;
  int samples = 360;
  std::optional<double> tol;
  std::string out_dir = ".";
  std::string format = "json,csv";
  std::uint64_t seed = 1;
  double inner_scale = 1.0;
  std::string check = "all";
  std::string center;
  std::optional<double> radius;
};

void add_common(CLI::App* cmd, RawOptions& raw) {
  cmd->add_option("--boundary", raw.boundary, "disk | ellipse:t | parabola:t | jacobi:p");
  cmd->add_option("--zeros", raw.zeros, "nonzero zeros a_1..a_{d-1}, comma-separated, e.g. 0.2+0.17i,-0.42-0.17i");
  cmd->add_option("--theta", raw.theta, "unimodular factor angle; the product is then canonicalized");
  cmd->add_option("--samples", raw.samples, "number of boundary samples")->check(CLI::Range(3, 1000000));
  cmd->add_option("--tol", raw.tol, "override every check tolerance")->check(CLI::PositiveNumber);
  cmd->add_option("--out-dir", raw.out_dir, "directory for output files");
  cmd->add_option("--format", raw.format, "comma-separated subset of json,csv,svg");
  cmd->add_option("--seed", raw.seed, "seed for random starting points");
}

JobConfig to_config(const RawOptions& raw, const std::string& command) {
  JobConfig cfg;
  std::string boundary = raw.boundary;
  std::string zeros = raw.zeros;
  if (command == "jacobi-experiment") {
    if (boundary.empty()) boundary = "jacobi:0.800438";
    if (zeros.empty()) zeros = "0.3,-0.3";
  }
  cfg.boundary = parse_boundary(boundary.empty() ? "disk" : boundary);
  cfg.zeros = parse_complex_list(zeros);
  cfg.theta = raw.theta;
  cfg.samples = raw.samples;
  cfg.tol = raw.tol;
  cfg.out_dir = raw.out_dir;
  cfg.formats = parse_formats(raw.format);
  cfg.seed = raw.seed;
  cfg.threads = thread_limit_from_env();
  cfg.inner_scale = raw.inner_scale;
  cfg.checks.clear();
  for (std::size_t start = 0; start <= raw.check.size();) {
    const std::size_t comma = std::min(raw.check.find(',', start), raw.check.size());
    const std::string name = raw.check.substr(start, comma - start);
    if (name != "all" && name != "chapple" && name != "tangency" && name != "closure" && name != "cayley" &&
        name != "centroid") {
      throw Error(Errc::invalid_argument, "unknown check '" + name + "'");
    }
    cfg.checks.insert(name);
    start = comma + 1;
  }
  if (!raw.center.empty()) cfg.center = parse_complex(raw.center);
  cfg.radius = raw.radius;
  return cfg;
}

bool is_internal(Errc code) { return code == Errc::root_quality_failure || code == Errc::no_convergence; }

void print_error(std::ostream& out, const std::string& code, const std::string& message) {
  out << nlohmann::json{{"error", code}, {"message", message}}.dump() << "\n";
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Blaschke-like maps, interior curves and Poncelet verification"};
  app.require_subcommand(1);
  RawOptions raw;

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"interior-curve", "interior curve: closed form for degree 3 plus sampled chord envelope"},
      {"exterior-curve", "tangent-intersection locus and its algebraic degree fits"},
      {"centroid-locus", "locus of preimage-polygon centroids"},
      {"verify", "tangency, closure, Cayley, centroid and Chapple checks"},
      {"cayley", "roots of the Cayley condition for the ellipse and which one closes"},
      {"jacobi-experiment", "chord envelope through the Jacobi elliptic map and its conic fit"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* cmd = app.add_subcommand(name, help);
    add_common(cmd, raw);
    if (name == "verify") {
      cmd->add_option("--inner-scale", raw.inner_scale, "scale the inner conic's r before checking");
      cmd->add_option("--check", raw.check, "all or a comma list of tangency,closure,cayley,centroid,chapple");
      cmd->add_option("--center", raw.center, "circle center for --check chapple");
      cmd->add_option("--radius", raw.radius, "circle radius for --check chapple");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return 0;
    }
    print_error(out, "InvalidArgument", e.what());
    return static_cast<int>(ExitCode::validation);
  }

  const std::string name = app.get_subcommands().front()->get_name();
  try {
    const JobConfig cfg = to_config(raw, name);
    CommandResult result;
    if (name == "interior-curve") result = cmd_interior_curve(cfg);
    else if (name == "exterior-curve") result = cmd_exterior_curve(cfg);
    else if (name == "centroid-locus") result = cmd_centroid_locus(cfg);
    else if (name == "verify") result = cmd_verify(cfg);
    else if (name == "cayley") result = cmd_cayley(cfg);
    else result = cmd_jacobi_experiment(cfg);
    out << result.report.dump(2) << "\n";
    return static_cast<int>(result.code);
  } catch (const Error& e) {
    print_error(out, std::string(to_string(e.code())), e.what());
    return static_cast<int>(is_internal(e.code()) ? ExitCode::internal : ExitCode::validation);
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::internal);
  }
}

}  // namespace poncelet::cli
