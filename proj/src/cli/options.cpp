#include <charconv>
#include <cmath>
#include <cstdlib>
#include <thread>

#include "cli.hpp"
#include "poncelet/elliptic_exterior.hpp"
#include "poncelet/elliptic_interior.hpp"
#include "poncelet/error.hpp"
#include "poncelet/parabolic_exterior.hpp"

namespace poncelet::cli {

namespace {

double parse_real(std::string_view text, std::string_view whole) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(value)) {
    throw Error(Errc::invalid_argument, "cannot parse number '" + std::string(whole) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    out.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

cplx parse_complex(std::string_view text) {
  if (text.empty()) throw Error(Errc::invalid_argument, "empty complex number");
  if (text.back() != 'i') return {parse_real(text, text), 0.0};

  const std::string_view body = text.substr(0, text.size() - 1);
  std::size_t split_at = 0;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split_at = i;
      break;
    }
  }
  const std::string_view re = body.substr(0, split_at);
  const std::string_view im = body.substr(split_at);
  double imag = 0.0;
  if (im.empty() || im == "+") {
    imag = 1.0;
  } else if (im == "-") {
    imag = -1.0;
  } else {
    imag = parse_real(im, text);
  }
  return {re.empty() ? 0.0 : parse_real(re, text), imag};
}

std::vector<cplx> parse_complex_list(std::string_view text) {
  std::vector<cplx> out;
  if (text.empty()) return out;
  for (const std::string_view item : split(text, ',')) out.push_back(parse_complex(item));
  return out;
}

std::string BoundarySpec::to_string() const {
  switch (kind) {
    case Kind::disk: return "disk";
    case Kind::ellipse: return "ellipse:" + std::to_string(param);
    case Kind::parabola: return "parabola:" + std::to_string(param);
    case Kind::jacobi: return "jacobi:" + std::to_string(param);
  }
  return "disk";
}

BoundarySpec parse_boundary(std::string_view text) {
  BoundarySpec spec;
  if (text == "disk") return spec;
  const std::size_t colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw Error(Errc::invalid_argument, "boundary must be disk, ellipse:t, parabola:t or jacobi:p");
  }
  const std::string_view kind = text.substr(0, colon);
  spec.param = parse_real(text.substr(colon + 1), text);
  if (kind == "ellipse") {
    spec.kind = BoundarySpec::Kind::ellipse;
    JoukowskiParam check(spec.param);
  } else if (kind == "parabola") {
    spec.kind = BoundarySpec::Kind::parabola;
    ParabolaParam check(spec.param);
  } else if (kind == "jacobi") {
    spec.kind = BoundarySpec::Kind::jacobi;
    if (!(spec.param > 0.0 && spec.param < 1.0)) throw Error(Errc::invalid_argument, "jacobi:p needs 0 < p < 1");
  } else {
    throw Error(Errc::invalid_argument, "unknown boundary '" + std::string(kind) + "'");
  }
  return spec;
}

std::set<std::string> parse_formats(std::string_view text) {
  std::set<std::string> out;
  for (const std::string_view f : split(text, ',')) {
    if (f != "json" && f != "csv" && f != "svg") {
      throw Error(Errc::invalid_argument, "unknown format '" + std::string(f) + "'");
    }
    out.emplace(f);
  }
  return out;
}

int thread_limit_from_env() {
  if (const char* env = std::getenv("PONCELET_KIT_THREADS")) {
    int n = 0;
    const std::string_view s(env);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), n);
    if (ec == std::errc{} && ptr == s.data() + s.size() && n > 0) return n;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

Boundary make_boundary(const BoundarySpec& spec) {
  Boundary b;
  b.spec = spec;
  switch (spec.kind) {
    case BoundarySpec::Kind::disk:
      b.conic = {cplx{}, 1.0, cplx{}, -1.0};
      b.map = [](cplx w) { return w / std::abs(w); };
      b.interior = [](const BlaschkeProduct& p) { return interior_curve_disk(p); };
      break;
    case BoundarySpec::Kind::ellipse: {
      const JoukowskiParam t(spec.param);
      b.conic = ellipse_Et(t);
      b.map = [t](cplx w) { return phi_boundary(t, w); };
      b.interior = [t](const BlaschkeProduct& p) {
        if (p.degree() != 3) throw Error(Errc::invalid_argument, "the closed form needs degree 3");
        return interior_curve_elliptic(p.zeros()[0], p.zeros()[1], t);
      };
      break;
    }
    case BoundarySpec::Kind::parabola: {
      const ParabolaParam t(spec.param);
      b.conic = parabola_Pt(t);
      b.map = [t](cplx w) { return psi_boundary(t, w); };
      b.interior = [t](const BlaschkeProduct& p) {
        if (p.degree() != 3) throw Error(Errc::invalid_argument, "the closed form needs degree 3");
        return interior_curve_parabolic(p.zeros()[0], p.zeros()[1], t);
      };
      break;
    }
    case BoundarySpec::Kind::jacobi: {
      const InteriorMapParam param = solve_params(spec.param);
      const double f = param.focus();
      b.conic = standard_to_general({cplx(f, 0.0), cplx(-f, 0.0), 2.0});
      b.map = [param](cplx w) { return gamma_extended(param, w / std::abs(w)); };
      break;
    }
  }
  return b;
}

BlaschkeProduct make_product(const JobConfig& cfg) {
  if (cfg.zeros.empty()) throw Error(Errc::invalid_argument, "--zeros is required");
  if (cfg.theta && *cfg.theta != 0.0) {
    std::vector<cplx> all{cplx{}};
    all.insert(all.end(), cfg.zeros.begin(), cfg.zeros.end());
    return canonicalize(GeneralBlaschke{all, *cfg.theta}).product;
  }
  return BlaschkeProduct(cfg.zeros);
}

}  // namespace poncelet::cli
