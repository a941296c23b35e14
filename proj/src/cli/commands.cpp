#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <numbers>
#include <random>

#include "cli.hpp"
#include "poncelet/cayley.hpp"
#include "poncelet/elliptic_exterior.hpp"
#include "poncelet/elliptic_interior.hpp"
#include "poncelet/envelope.hpp"
#include "poncelet/error.hpp"
#include "poncelet/json_io.hpp"
#include "poncelet/parabolic_exterior.hpp"
#include "poncelet/parallel.hpp"
#include "svg.hpp"

namespace poncelet::cli {

namespace {

using nlohmann::json;
constexpr double kPi = std::numbers::pi;
constexpr double kExteriorWindow = 4.0;

struct Row {
  cplx z;
  double arg = 0.0;
};

class Artifacts {
 public:
  Artifacts(const JobConfig& cfg, std::string stem) : cfg_(cfg), stem_(std::move(stem)) {}

  bool wants(const char* format) const { return cfg_.formats.count(format) > 0; }

  void json_file(const json& doc) const {
    if (wants("json")) write(stem_ + ".json", doc.dump(2) + "\n");
  }
  void csv_file(const std::vector<Row>& rows, const std::string& suffix = "") const {
    if (!wants("csv")) return;
    std::string text = "re,im,arg_lambda\n";
    char buf[96];
    for (const Row& r : rows) {
      std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", r.z.real(), r.z.imag(), r.arg);
      text += buf;
    }
    write(stem_ + suffix + ".csv", text);
  }
  void chords_file(const std::vector<std::pair<cplx, cplx>>& chords) const {
    std::string text = "re1,im1,re2,im2\n";
    char buf[128];
    for (const auto& [a, b] : chords) {
      std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", a.real(), a.imag(), b.real(), b.imag());
      text += buf;
    }
    write(stem_ + "_chords.csv", text);
  }
  void svg_file(const SvgPlot& plot) const {
    if (wants("svg")) write(stem_ + ".svg", plot.render());
  }

 private:
  void write(const std::string& name, const std::string& text) const {
    std::filesystem::create_directories(cfg_.out_dir);
    const auto path = std::filesystem::path(cfg_.out_dir) / name;
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open " + path.string() + " for writing");
    os << text;
  }

  const JobConfig& cfg_;
  std::string stem_;
};

json boundary_json(const Boundary& b) {
  json j = {{"spec", b.spec.to_string()}, {"conic", b.conic}};
  switch (b.spec.kind) {
    case BoundarySpec::Kind::disk: j["kind"] = "disk"; break;
    case BoundarySpec::Kind::ellipse: j["kind"] = "ellipse"; j["t"] = b.spec.param; break;
    case BoundarySpec::Kind::parabola: j["kind"] = "parabola"; j["t"] = b.spec.param; break;
    case BoundarySpec::Kind::jacobi: j["kind"] = "jacobi"; j["p"] = b.spec.param; break;
  }
  return j;
}

json product_json(const BlaschkeProduct& b) {
  return {{"degree", b.degree()}, {"zeros", std::vector<cplx>(b.zeros().begin(), b.zeros().end())}};
}

json check_json(const std::string& name, double residual, double tol) {
  const bool pass = std::isfinite(residual) && residual <= tol;
  return {{"name", name}, {"residual", std::isfinite(residual) ? json(residual) : json(nullptr)},
          {"tolerance", tol}, {"verdict", pass ? "PASS" : "FAIL"}};
}

bool all_pass(const json& checks) {
  for (const json& c : checks) {
    if (c.at("verdict") != "PASS") return false;
  }
  return true;
}

// Boundary drawn from the emitted JSON description.
std::vector<cplx> boundary_polyline(const json& boundary) {
  const std::string kind = boundary.at("kind");
  if (kind == "parabola") {
    // P_t is x = -y^2 / (4 t^2).
    const double t = boundary.at("t");
    const double reach = 40.0 * std::max(1.0, t * t);
    std::vector<cplx> out;
    for (int i = 0; i <= 800; ++i) {
      const double y = -reach + 2.0 * reach * i / 800;
      out.emplace_back(-y * y / (4.0 * t * t), y);
    }
    return out;
  }
  return sample_ellipse(boundary.at("conic").get<ConicGeneral>(), 512);
}

bool bounded(const json& boundary) { return boundary.at("kind") != "parabola"; }

std::vector<Row> envelope_rows(const ChordEnvelope& env) {
  std::vector<Row> rows;
  rows.reserve(env.points.size());
  for (const auto& s : env.points) rows.push_back({s.point, s.arg_lambda});
  return rows;
}

std::vector<cplx> row_points(const std::vector<Row>& rows) {
  std::vector<cplx> out;
  out.reserve(rows.size());
  for (const Row& r : rows) out.push_back(r.z);
  return out;
}

// Every k-th lambda sample of chords, enough to show the family.
std::vector<std::pair<cplx, cplx>> thin_chords(const ChordEnvelope& env, int samples, int degree) {
  const std::size_t per = static_cast<std::size_t>(degree) * (degree - 1) / 2;
  const int stride = std::max(1, samples / 60);
  std::vector<std::pair<cplx, cplx>> out;
  for (int k = 0; k < samples; k += stride) {
    for (std::size_t c = 0; c < per; ++c) out.push_back(env.chords[k * per + c]);
  }
  return out;
}

SvgPlot envelope_plot(const json& report, const std::vector<Row>& rows,
                      const std::vector<std::pair<cplx, cplx>>& chords) {
  SvgPlot plot;
  const json& boundary = report.at("boundary");
  const bool fit_boundary = bounded(boundary);
  plot.polyline(boundary_polyline(boundary), kBoundaryColor, 2.0, fit_boundary, fit_boundary);
  for (const auto& [a, b] : chords) plot.segment(a, b, kChordColor, 0.8, fit_boundary);
  if (report.contains("conic") && report.contains("standard")) {
    plot.polyline(sample_ellipse(report.at("conic").get<ConicGeneral>()), kCurveColor, 2.5, true);
  }
  plot.dots(row_points(rows), kDotColor, 2.0);
  return plot;
}

double tol_or(const JobConfig& cfg, double fallback) { return cfg.tol.value_or(fallback); }

double max_tangency(const ConicGeneral& conic, const std::vector<std::pair<cplx, cplx>>& chords) {
  double worst = 0.0;
  for (const auto& [a, b] : chords) worst = std::max(worst, std::abs(tangency_residual(line_through(a, b), conic)));
  return worst;
}

struct CentroidRun {
  std::vector<Row> rows;
  CentroidLocus locus;
  double max_residual = 0.0;
};

CentroidRun run_centroids(const JobConfig& cfg, const Boundary& bd, const BlaschkeProduct& b) {
  CentroidRun run;
  if (bd.spec.kind == BoundarySpec::Kind::ellipse) {
    run.locus = centroid_locus_elliptic({b, JoukowskiParam(bd.spec.param)});
  } else if (bd.spec.kind == BoundarySpec::Kind::disk) {
    const Circle c = centroid_circle(b);
    run.locus.center = c.center;
    run.locus.semi_horizontal = run.locus.semi_vertical = c.radius;
    if (c.radius > 1e-15) run.locus.ellipse = EllipseStandard{c.center, c.center, 2.0 * c.radius};
  } else {
    throw Error(Errc::invalid_argument, "centroid locus needs a disk or ellipse boundary");
  }
  const int n = cfg.samples;
  run.rows.resize(n);
  parallel_for(n, cfg.threads, [&](std::size_t k) {
    const double arg = 2.0 * kPi * static_cast<double>(k) / n;
    cplx sum{};
    const auto w = preimages(b, std::polar(1.0, arg));
    for (const cplx x : w) sum += bd.map(x);
    run.rows[k] = {sum / static_cast<double>(w.size()), arg};
  });
  for (const Row& r : run.rows) {
    const double res = run.locus.ellipse
                           ? std::abs(std::abs(r.z - run.locus.ellipse->f1) + std::abs(r.z - run.locus.ellipse->f2) -
                                      run.locus.ellipse->r)
                           : std::abs(r.z - run.locus.center);
    run.max_residual = std::max(run.max_residual, res);
  }
  return run;
}

json locus_json(const CentroidLocus& locus) {
  json j = {{"center", locus.center},
            {"semi_horizontal", locus.semi_horizontal},
            {"semi_vertical", locus.semi_vertical},
            {"point", locus.is_point()}};
  if (locus.ellipse) j["standard"] = *locus.ellipse;
  return j;
}

// On a parabola, w = -1 maps to infinity. Rotate the lambda grid so that
// B(-1) falls halfway between two samples.
double sample_phase(const Boundary& bd, const BlaschkeProduct& b, int n) {
  if (bd.spec.kind != BoundarySpec::Kind::parabola) return 0.0;
  return std::arg(b(-1.0)) + kPi / n;
}

void require_closed_form(const Boundary& bd, const BlaschkeProduct& b) {
  if (!bd.interior) throw Error(Errc::invalid_argument, "this boundary has no closed-form interior curve");
  if (b.degree() != 3) throw Error(Errc::invalid_argument, "closed-form checks need a degree-3 product");
}

}  // namespace

CommandResult cmd_interior_curve(const JobConfig& cfg) {
  const Boundary bd = make_boundary(cfg.boundary);
  const BlaschkeProduct b = make_product(cfg);
  const ChordEnvelope env = chord_envelope(b, cfg.samples, bd.map, cfg.threads, sample_phase(bd, b, cfg.samples));

  CommandResult res;
  json& rep = res.report;
  rep = {{"command", "interior-curve"}, {"boundary", boundary_json(bd)}, {"blaschke", product_json(b)},
         {"samples", cfg.samples}, {"envelope_points", env.points.size()}};
  json checks = json::array();
  if (bd.interior && b.degree() == 3) {
    const ConicGeneral conic = bd.interior(b);
    const ConicClass cls = classify_conic(conic);
    rep["conic"] = conic;
    rep["class"] = std::string(to_string(cls));
    if (cls == ConicClass::ellipse || cls == ConicClass::circle) {
      const EllipseStandard e = general_to_standard(conic);
      rep["standard"] = e;
      if (cls == ConicClass::circle) rep["circle"] = {{"center", e.center()}, {"radius", e.semi_major()}};
    }
    checks.push_back(check_json("tangency", max_tangency(conic, env.chords), tol_or(cfg, 1e-8)));
  }
  rep["checks"] = checks;
  rep["verdict"] = all_pass(checks) ? "PASS" : "FAIL";
  if (!all_pass(checks)) res.code = ExitCode::verification_failed;

  const Artifacts out(cfg, "interior_curve");
  const std::vector<Row> rows = envelope_rows(env);
  out.json_file(rep);
  out.csv_file(rows);
  if (out.wants("svg")) {
    const auto chords = thin_chords(env, cfg.samples, b.degree());
    out.chords_file(chords);
    out.svg_file(envelope_plot(rep, rows, chords));
  }
  return res;
}

CommandResult cmd_exterior_curve(const JobConfig& cfg) {
  const Boundary bd = make_boundary(cfg.boundary);
  const BlaschkeProduct b = make_product(cfg);
  ExteriorSamples samples;
  switch (bd.spec.kind) {
    case BoundarySpec::Kind::disk: samples = exterior_curve_samples_disk(b, cfg.samples); break;
    case BoundarySpec::Kind::ellipse:
      samples = exterior_curve_samples({b, JoukowskiParam(bd.spec.param)}, cfg.samples);
      break;
    case BoundarySpec::Kind::parabola:
      samples = exterior_curve_samples_parabolic({b, ParabolaParam(bd.spec.param)}, cfg.samples);
      break;
    case BoundarySpec::Kind::jacobi:
      throw Error(Errc::invalid_argument, "exterior curves are defined for disk, ellipse and parabola");
  }
  std::vector<Row> rows;
  for (const auto& s : samples.points) rows.push_back({s.point, s.arg_lambda});

  CommandResult res;
  json& rep = res.report;
  rep = {{"command", "exterior-curve"}, {"boundary", boundary_json(bd)}, {"blaschke", product_json(b)},
         {"samples", cfg.samples}, {"points", rows.size()}, {"skipped", samples.skipped},
         {"fit_window", kExteriorWindow}};
  json fits = json::array();
  json checks = json::array();
  const std::vector<cplx> pts = row_points(rows);
  for (int degree = b.degree() - 1; degree >= std::max(1, b.degree() - 2); --degree) {
    json f = {{"degree", degree}};
    try {
      const CurveFit fit = fit_algebraic_curve(pts, degree, kExteriorWindow);
      f["residual_max"] = fit.residual_max;
      f["residual_mean"] = fit.residual_mean;
      f["n_points"] = fit.n_points;
      if (degree == b.degree() - 1) checks.push_back(check_json("degree_bound_fit", fit.residual_max, tol_or(cfg, 1e-6)));
    } catch (const Error& e) {
      if (e.code() != Errc::rank_deficient) throw;
      f["error"] = std::string(to_string(e.code()));
      if (degree == b.degree() - 1) checks.push_back(check_json("degree_bound_fit", 0.0, tol_or(cfg, 1e-6)));
    }
    fits.push_back(f);
  }
  rep["fits"] = fits;
  rep["checks"] = checks;
  rep["verdict"] = all_pass(checks) ? "PASS" : "FAIL";
  if (!all_pass(checks)) res.code = ExitCode::verification_failed;

  const Artifacts out(cfg, "exterior_curve");
  out.json_file(rep);
  out.csv_file(rows);
  if (out.wants("svg")) {
    SvgPlot plot;
    std::vector<cplx> near, far;
    for (const cplx z : pts) (std::abs(z) <= kExteriorWindow ? near : far).push_back(z);
    const bool fit_boundary = bounded(rep.at("boundary"));
    plot.polyline(boundary_polyline(rep.at("boundary")), kBoundaryColor, 2.0, fit_boundary, fit_boundary);
    plot.dots(near, kDotColor, 2.0);
    out.svg_file(plot);
  }
  return res;
}

CommandResult cmd_centroid_locus(const JobConfig& cfg) {
  const Boundary bd = make_boundary(cfg.boundary);
  const BlaschkeProduct b = make_product(cfg);
  const CentroidRun run = run_centroids(cfg, bd, b);

  CommandResult res;
  json& rep = res.report;
  const double expected_ratio =
      bd.spec.kind == BoundarySpec::Kind::ellipse ? JoukowskiParam(bd.spec.param).contraction() : 1.0;
  rep = {{"command", "centroid-locus"}, {"boundary", boundary_json(bd)}, {"blaschke", product_json(b)},
         {"samples", cfg.samples}, {"predicted", locus_json(run.locus)},
         {"expected_axis_ratio", std::abs(expected_ratio)}};
  if (!run.locus.is_point()) rep["axis_ratio"] = run.locus.semi_vertical / run.locus.semi_horizontal;
  json checks = json::array({check_json("centroid_on_locus", run.max_residual, tol_or(cfg, 1e-8))});
  rep["checks"] = checks;
  rep["verdict"] = all_pass(checks) ? "PASS" : "FAIL";
  if (!all_pass(checks)) res.code = ExitCode::verification_failed;

  const Artifacts out(cfg, "centroid_locus");
  out.json_file(rep);
  out.csv_file(run.rows);
  if (out.wants("svg")) {
    SvgPlot plot;
    plot.polyline(boundary_polyline(rep.at("boundary")), kBoundaryColor, 2.0, true);
    const json& pred = rep.at("predicted");
    if (pred.contains("standard")) {
      const EllipseStandard e = pred.at("standard").get<EllipseStandard>();
      plot.polyline(sample_ellipse(standard_to_general(e)), kCurveColor, 2.5, true);
    }
    plot.dots(row_points(run.rows), kDotColor, 2.0);
    out.svg_file(plot);
  }
  return res;
}

CommandResult cmd_verify(const JobConfig& cfg) {
  CommandResult res;
  json& rep = res.report;
  rep = {{"command", "verify"}};
  json checks = json::array();
  const bool everything = cfg.checks.count("all") > 0;
  const auto wants = [&](const char* name) { return everything || cfg.checks.count(name) > 0; };

  if (cfg.checks.count("chapple")) {
    if (!cfg.center || !cfg.radius) throw Error(Errc::invalid_argument, "--check chapple needs --center and --radius");
    if (!(std::abs(*cfg.center) + *cfg.radius < 1.0 && *cfg.radius > 0.0)) {
      throw Error(Errc::invalid_argument, "the circle must lie inside the unit disk");
    }
    rep["chapple"] = {{"center", *cfg.center}, {"radius", *cfg.radius}};
    checks.push_back(check_json("chapple", chapple_check(*cfg.center, *cfg.radius), tol_or(cfg, 1e-12)));
  }

  if (everything || wants("tangency") || wants("closure") || wants("cayley") || wants("centroid")) {
    const Boundary bd = make_boundary(cfg.boundary);
    const BlaschkeProduct b = make_product(cfg);
    require_closed_form(bd, b);
    ConicGeneral inner = bd.interior(b);
    if (cfg.inner_scale != 1.0) {
      if (!(cfg.inner_scale > 0.0)) throw Error(Errc::invalid_argument, "--inner-scale must be positive");
      EllipseStandard e = general_to_standard(inner);
      e.r *= cfg.inner_scale;
      inner = standard_to_general(e);
    }
    rep["boundary"] = boundary_json(bd);
    rep["blaschke"] = product_json(b);
    rep["inner"] = inner;
    rep["inner_scale"] = cfg.inner_scale;

    if (wants("tangency")) {
      const ChordEnvelope env = chord_envelope(b, cfg.samples, bd.map, cfg.threads, sample_phase(bd, b, cfg.samples));
      checks.push_back(check_json("tangency", max_tangency(inner, env.chords), tol_or(cfg, 1e-8)));
    }
    if (wants("closure")) {
      std::mt19937_64 rng(cfg.seed);
      // Keep parabola starts away from the point at infinity.
      const double reach = bd.spec.kind == BoundarySpec::Kind::parabola ? kPi - 0.2 : kPi;
      std::uniform_real_distribution<double> angle(-reach, reach);
      double worst = 0.0;
      json starts = json::array();
      for (int i = 0; i < 20; ++i) {
        const cplx z0 = bd.map(std::polar(1.0, angle(rng)));
        double d = std::numeric_limits<double>::infinity();
        try {
          d = poncelet_closure(bd.conic, inner, z0, 3);
        } catch (const Error& e) {
          rep["closure_error"] = std::string(to_string(e.code()));
        }
        starts.push_back({{"z0", z0}, {"closure", std::isfinite(d) ? json(d) : json(nullptr)}});
        worst = std::max(worst, d);
      }
      rep["closure_starts"] = starts;
      checks.push_back(check_json("closure", worst, tol_or(cfg, 1e-7)));
    }
    if (wants("cayley")) {
      const double c2 = cayley_c2_residual(conic_to_matrix(bd.conic), conic_to_matrix(inner));
      checks.push_back(check_json("cayley", std::abs(c2), tol_or(cfg, 1e-7)));
    }
    if (wants("centroid") && bd.spec.kind != BoundarySpec::Kind::parabola) {
      checks.push_back(check_json("centroid", run_centroids(cfg, bd, b).max_residual, tol_or(cfg, 1e-8)));
    }
  }

  rep["checks"] = checks;
  rep["verdict"] = all_pass(checks) ? "PASS" : "FAIL";
  if (!all_pass(checks)) res.code = ExitCode::verification_failed;
  Artifacts(cfg, "verify").json_file(rep);
  return res;
}

CommandResult cmd_cayley(const JobConfig& cfg) {
  const Boundary bd = make_boundary(cfg.boundary);
  const BlaschkeProduct b = make_product(cfg);
  require_closed_form(bd, b);
  const cplx a = b.zeros()[0], c = b.zeros()[1];
  const ConicMatrix outer = conic_to_matrix(bd.conic);

  CommandResult res;
  json& rep = res.report;
  rep = {{"command", "cayley"}, {"boundary", boundary_json(bd)}, {"blaschke", product_json(b)}};
  cplx f1, f2;
  std::vector<double> candidates;
  if (bd.spec.kind == BoundarySpec::Kind::ellipse) {
    const JoukowskiParam t(bd.spec.param);
    std::tie(f1, f2) = interior_foci(a, c, t);
    const auto [small, large] = cayley_R(f1, f2, t);
    rep["R_coefficients"] = cayley_R_coefficients(f1, f2, t);
    candidates = {small, large};
  } else if (bd.spec.kind == BoundarySpec::Kind::disk) {
    f1 = a, f2 = c;
    candidates = {std::abs(1.0 - std::conj(a) * c)};
  } else {
    throw Error(Errc::invalid_argument, "cayley needs a disk or ellipse boundary");
  }
  rep["foci"] = {f1, f2};
  const cplx z0 = bd.map(cplx(1.0, 0.0));
  json roots = json::array();
  int survivors = 0;
  for (const double r : candidates) {
    const ConicGeneral inner = standard_to_general({f1, f2, r});
    json entry = {{"r", r}, {"c2_residual", cayley_c2_residual(outer, conic_to_matrix(inner))}};
    try {
      const double d = poncelet_closure(bd.conic, inner, z0, 3);
      entry["closure"] = d;
      if (d <= tol_or(cfg, 1e-7)) ++survivors;
    } catch (const Error& e) {
      entry["closure_error"] = std::string(to_string(e.code()));
    }
    roots.push_back(entry);
  }
  rep["roots"] = roots;
  rep["interscribed_roots"] = survivors;
  rep["verdict"] = survivors == 1 ? "PASS" : "FAIL";
  if (survivors != 1) res.code = ExitCode::verification_failed;
  Artifacts(cfg, "cayley").json_file(rep);
  return res;
}

CommandResult cmd_jacobi_experiment(const JobConfig& cfg) {
  if (cfg.boundary.kind != BoundarySpec::Kind::jacobi) {
    throw Error(Errc::invalid_argument, "jacobi-experiment needs --boundary jacobi:p");
  }
  const Boundary bd = make_boundary(cfg.boundary);
  const BlaschkeProduct b = make_product(cfg);
  const InteriorMapParam param = solve_params(cfg.boundary.param);
  const NonEllipseReport report = non_ellipse_experiment(param, b, cfg.samples, cfg.threads);

  // The same pipeline through the Joukowski map, whose interior curve is an ellipse.
  const JoukowskiParam control_t(std::sqrt((1.0 - param.p) / (1.0 + param.p)));
  const ChordEnvelope control_env =
      chord_envelope(b, cfg.samples, [&](cplx w) { return phi_boundary(control_t, w); }, cfg.threads);
  const ConicFit control_fit = fit_conic(row_points(envelope_rows(control_env)));

  CommandResult res;
  json& rep = res.report;
  rep = {{"command", "jacobi-experiment"},
         {"boundary", boundary_json(bd)},
         {"blaschke", product_json(b)},
         {"verdict", report.non_ellipse ? "non-ellipse" : "ellipse"},
         {"fit_residual_max", report.fit_residual_max},
         {"fit_residual_mean", report.fit_residual_mean},
         {"threshold", kNonEllipseThreshold},
         {"n_samples", report.n_samples},
         {"n_envelope_points", report.n_envelope_points},
         {"params", {{"p", param.p}, {"k", param.k}, {"c", param.c}}},
         {"control", {{"t", control_t.t()},
                      {"fit_residual_max", control_fit.residual_max},
                      {"fit_residual_mean", control_fit.residual_mean}}}};

  const Artifacts out(cfg, "jacobi_experiment");
  const std::vector<Row> rows = envelope_rows(report.envelope);
  out.json_file(rep);
  out.csv_file(rows);
  if (out.wants("svg")) {
    const auto chords = thin_chords(report.envelope, cfg.samples, b.degree());
    out.chords_file(chords);
    out.svg_file(envelope_plot(rep, rows, chords));
  }
  return res;
}

}  // namespace poncelet::cli
