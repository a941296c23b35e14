#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "test_support.hpp"

using namespace poncelet;
using namespace poncelet::cli;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code = 0;
  nlohmann::json report;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "poncelet-kit");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  Outcome o{code, {}};
  if (!out.str().empty() && out.str().front() == '{') o.report = nlohmann::json::parse(out.str());
  return o;
}

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("poncelet_cli_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

const std::string kZeros = "0.2+0.17i,-0.42-0.17i";

}  // namespace

TEST_CASE("parse_complex forms") {
  CHECK(parse_complex("0.2+0.17i") == cplx(0.2, 0.17));
  CHECK(parse_complex("-0.42-0.17i") == cplx(-0.42, -0.17));
  CHECK(parse_complex("3") == cplx(3.0, 0.0));
  CHECK(parse_complex("-2.5i") == cplx(0.0, -2.5));
  CHECK(parse_complex("i") == cplx(0.0, 1.0));
  CHECK(parse_complex("-i") == cplx(0.0, -1.0));
  CHECK(parse_complex("1-i") == cplx(1.0, -1.0));
  CHECK(parse_complex("1e-3+2e-2i") == cplx(1e-3, 2e-2));
  for (const char* bad : {"", "1+", "abc", "1 + 2i", "2i+1", "1+2j"}) {
    CHECK(error_code([&] { parse_complex(bad); }) == Errc::invalid_argument);
  }
  const auto list = parse_complex_list("0,0.3,-0.3i");
  REQUIRE(list.size() == 3);
  CHECK(list[2] == cplx(0.0, -0.3));
}

TEST_CASE("parse_boundary") {
  CHECK(parse_boundary("disk").kind == BoundarySpec::Kind::disk);
  const BoundarySpec e = parse_boundary("ellipse:0.5");
  CHECK(e.kind == BoundarySpec::Kind::ellipse);
  CHECK(e.param == 0.5);
  CHECK(parse_boundary("parabola:2").kind == BoundarySpec::Kind::parabola);
  CHECK(parse_boundary("jacobi:0.8").kind == BoundarySpec::Kind::jacobi);
  for (const char* bad : {"ellipse:1", "ellipse:0", "ellipse", "parabola:-1", "jacobi:1.2", "square", "disk:3"}) {
    CHECK(error_code([&] { parse_boundary(bad); }) == Errc::invalid_argument);
  }
  CHECK(parse_formats("json,svg") == std::set<std::string>{"json", "svg"});
  CHECK(error_code([] { parse_formats("json,pdf"); }) == Errc::invalid_argument);
}

TEST_CASE("interior-curve on the disk reports a circle of radius 1/2") {
  const fs::path dir = fresh_dir("disk");
  const Outcome o = invoke({"interior-curve", "--boundary", "disk", "--zeros", "0,0", "--out-dir", dir.string()});
  CHECK(o.code == 0);
  CHECK(o.report["class"] == "circle");
  CHECK(o.report["circle"]["radius"].get<double>() == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(fs::exists(dir / "interior_curve.json"));
  CHECK(fs::exists(dir / "interior_curve.csv"));
  CHECK_FALSE(fs::exists(dir / "interior_curve.svg"));
  CHECK(slurp(dir / "interior_curve.csv").rfind("re,im,arg_lambda\n", 0) == 0);
}

TEST_CASE("reference ellipse and parabola runs pass their checks and write SVG") {
  for (const std::string boundary : {"ellipse:0.5", "parabola:0.7"}) {
    const fs::path dir = fresh_dir("ref");
    const Outcome o = invoke({"interior-curve", "--boundary", boundary, "--zeros", kZeros, "--out-dir", dir.string(),
                              "--format", "json,csv,svg"});
    CHECK(o.code == 0);
    CHECK(o.report["class"] == "ellipse");
    const std::string svg = slurp(dir / "interior_curve.svg");
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("#d62728") != std::string::npos);
  }
}

TEST_CASE("verify: reference config passes, perturbed inner conic fails") {
  const fs::path dir = fresh_dir("verify");
  const Outcome ok = invoke({"verify", "--boundary", "ellipse:0.5", "--zeros", kZeros, "--out-dir", dir.string()});
  CHECK(ok.code == 0);
  for (const auto& c : ok.report["checks"]) CHECK(c["verdict"] == "PASS");

  const Outcome bad = invoke({"verify", "--boundary", "ellipse:0.5", "--zeros", kZeros, "--inner-scale", "1.05",
                              "--out-dir", dir.string()});
  CHECK(bad.code == 3);
  int failed = 0;
  for (const auto& c : bad.report["checks"]) {
    if (c["verdict"] == "FAIL") ++failed;
    if (c["name"] == "cayley" || c["name"] == "closure") CHECK(c["verdict"] == "FAIL");
  }
  CHECK(failed >= 2);

  const Outcome chapple = invoke({"verify", "--check", "chapple", "--center", "0.3", "--radius", "0.455",
                                  "--zeros", "0,0", "--out-dir", dir.string()});
  CHECK(chapple.code == 0);
  const Outcome chapple_bad = invoke({"verify", "--check", "chapple", "--center", "0.3", "--radius", "0.4",
                                      "--zeros", "0,0", "--out-dir", dir.string()});
  CHECK(chapple_bad.code == 3);
}

TEST_CASE("centroid-locus and cayley") {
  const fs::path dir = fresh_dir("centroid");
  const Outcome c = invoke({"centroid-locus", "--boundary", "ellipse:0.5", "--zeros", kZeros, "--out-dir", dir.string()});
  CHECK(c.code == 0);
  CHECK(c.report["axis_ratio"].get<double>() == doctest::Approx(0.6).epsilon(1e-9));
  const Outcome point = invoke({"centroid-locus", "--boundary", "ellipse:0.5", "--zeros", "0,0", "--out-dir", dir.string()});
  CHECK(point.code == 0);

  const Outcome cay = invoke({"cayley", "--boundary", "ellipse:0.5", "--zeros", kZeros, "--out-dir", dir.string()});
  CHECK(cay.code == 0);
  CHECK(cay.report["verdict"] == "PASS");
}

TEST_CASE("exit codes for invalid input") {
  const fs::path dir = fresh_dir("errors");
  const Outcome pole = invoke({"interior-curve", "--zeros", "1.5", "--out-dir", dir.string()});
  CHECK(pole.code == 2);
  CHECK(pole.report.contains("error"));
  CHECK(invoke({"interior-curve", "--zeros", "0.2+", "--out-dir", dir.string()}).code == 2);
  CHECK(invoke({"interior-curve", "--boundary", "ellipse:2", "--zeros", "0"}).code == 2);
  CHECK(invoke({"interior-curve", "--samples", "2", "--zeros", "0"}).code == 2);
  CHECK(invoke({"no-such-command"}).code == 2);
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"verify", "--check", "bogus", "--zeros", "0"}).code == 2);
  CHECK(invoke({"jacobi-experiment", "--boundary", "ellipse:0.5", "--out-dir", dir.string()}).code == 2);
  CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("determinism: identical configuration gives byte-identical files") {
  const std::vector<std::string> cmds{"interior-curve", "exterior-curve", "centroid-locus"};
  for (const auto& cmd : cmds) {
    const fs::path a = fresh_dir("det_a"), b = fresh_dir("det_b");
    setenv("PONCELET_KIT_THREADS", "1", 1);
    CHECK(invoke({cmd, "--boundary", "ellipse:0.5", "--zeros", kZeros, "--out-dir", a.string(), "--format",
                  "json,csv,svg"}).code == 0);
    setenv("PONCELET_KIT_THREADS", "3", 1);
    CHECK(invoke({cmd, "--boundary", "ellipse:0.5", "--zeros", kZeros, "--out-dir", b.string(), "--format",
                  "json,csv,svg"}).code == 0);
    unsetenv("PONCELET_KIT_THREADS");
    int files = 0;
    for (const auto& entry : fs::directory_iterator(a)) {
      ++files;
      CHECK(slurp(entry.path()) == slurp(b / entry.path().filename()));
    }
    CHECK(files >= 3);
  }
}

TEST_CASE("jacobi-experiment defaults give the non-ellipse verdict") {
  const fs::path dir = fresh_dir("jacobi");
  const Outcome o = invoke({"jacobi-experiment", "--out-dir", dir.string()});
  CHECK(o.code == 0);
  CHECK(o.report["verdict"] == "non-ellipse");
  CHECK(o.report["fit_residual_max"].get<double>() > 1e-3);
  CHECK(fs::exists(dir / "jacobi_experiment.csv"));
}

TEST_CASE("thread limit from the environment") {
  setenv("PONCELET_KIT_THREADS", "2", 1);
  CHECK(thread_limit_from_env() == 2);
  setenv("PONCELET_KIT_THREADS", "0", 1);
  CHECK(thread_limit_from_env() >= 1);
  unsetenv("PONCELET_KIT_THREADS");
  CHECK(thread_limit_from_env() >= 1);
}

TEST_CASE("parabola runs where B(-1) lands on the sample grid") {
  // B(w) = w (w - 0.1) / (1 - 0.1 w) sends -1 to 1, which is sample 0.
  const fs::path dir = fresh_dir("parabola_pole");
  CHECK(invoke({"interior-curve", "--boundary", "parabola:3", "--zeros", "0.1", "--out-dir", dir.string()}).code == 0);
  const Outcome v = invoke({"verify", "--boundary", "parabola:1.3", "--zeros", "0.1,0.2i", "--check", "tangency",
                            "--out-dir", dir.string()});
  CHECK(v.code == 0);
}
