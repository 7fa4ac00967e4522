#include "diskinterp/io.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "json.hpp"

namespace diskinterp::io {

using Json = nlohmann::ordered_json;

namespace {

Json parse_json(std::string_view text, const char* what) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

template <class T>
T field(const Json& obj, const char* key) {
  if (!obj.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  try {
    return obj.at(key).get<T>();
  } catch (const Json::exception& e) {
    throw ParseError(std::string("field '") + key + "': " + e.what());
  }
}

template <class T>
T optional_field(const Json& obj, const char* key, T fallback) {
  return obj.contains(key) ? field<T>(obj, key) : fallback;
}

double number(const Json& obj, const char* key) {
  if (!obj.contains(key) || !obj.at(key).is_number()) {
    throw ParseError(std::string("field '") + key + "' must be a number");
  }
  return obj.at(key).get<double>();
}

std::size_t count(const Json& obj, const char* key) {
  if (!obj.contains(key) || !obj.at(key).is_number_integer()) {
    throw ParseError(std::string("field '") + key + "' must be an integer");
  }
  const auto v = obj.at(key).get<std::int64_t>();
  if (v < 0) throw ParseError(std::string("field '") + key + "' must be non-negative");
  return static_cast<std::size_t>(v);
}

void require_object(const Json& j, const char* what) {
  if (!j.is_object()) throw ParseError(std::string(what) + " must be a JSON object");
}

Json check_to_json(const CheckResult& c) {
  Json j;
  j["name"] = c.name;
  j["passed"] = c.passed;
  j["measured"] = c.measured;
  j["threshold"] = c.threshold;
  j["grid_size"] = c.grid_size;
  j["tolerance"] = c.tolerance;
  j["seed"] = c.seed;
  return j;
}

CheckResult check_from_json(const Json& j) {
  require_object(j, "check");
  CheckResult c;
  c.name = field<std::string>(j, "name");
  c.passed = field<bool>(j, "passed");
  c.measured = number(j, "measured");
  c.threshold = number(j, "threshold");
  c.grid_size = count(j, "grid_size");
  c.tolerance = number(j, "tolerance");
  c.seed = field<std::uint64_t>(j, "seed");
  return c;
}

void diff(const Json& a, const Json& b, const std::string& path, double tol, std::string& out) {
  if (!out.empty()) return;
  if (a.is_number() && b.is_number()) {
    if (a.is_number_float() || b.is_number_float()) {
      const double x = a.get<double>();
      const double y = b.get<double>();
      if (!(std::abs(x - y) <= tol)) out = path;
    } else if (a != b) {
      out = path;
    }
    return;
  }
  if (a.type() != b.type()) {
    out = path;
    return;
  }
  if (a.is_object()) {
    if (a.size() != b.size()) {
      out = path.empty() ? "<root>" : path;
      return;
    }
    auto ia = a.begin();
    auto ib = b.begin();
    for (; ia != a.end(); ++ia, ++ib) {
      const std::string sub = path.empty() ? ia.key() : path + "." + ia.key();
      if (ia.key() != ib.key()) {
        out = sub;
        return;
      }
      diff(ia.value(), ib.value(), sub, tol, out);
      if (!out.empty()) return;
    }
  } else if (a.is_array()) {
    if (a.size() != b.size()) {
      out = path;
      return;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
      diff(a[i], b[i], path + "[" + std::to_string(i) + "]", tol, out);
      if (!out.empty()) return;
    }
  } else if (a != b) {
    out = path;
  }
}

}  // namespace

std::size_t default_grid_size() {
  if (const char* env = std::getenv(kGridSizeEnv)) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v >= 4096) return static_cast<std::size_t>(v);
  }
  return 1u << 16;
}

ProblemSpec parse_problem(std::string_view text) {
  const Json j = parse_json(text, "problem file");
  require_object(j, "problem");
  ProblemSpec spec;
  if (!j.contains("points") || !j.at("points").is_array()) {
    throw ParseError("field 'points' must be an array");
  }
  for (const auto& p : j.at("points")) {
    require_object(p, "point");
    spec.points.push_back({number(p, "theta"), number(p, "value_re"), number(p, "value_im")});
  }
  spec.eta = number(j, "eta");
  spec.n_max = j.contains("n_max") ? count(j, "n_max") : kDefaultNMax;
  spec.grid_size = j.contains("grid_size") ? count(j, "grid_size") : default_grid_size();
  spec.safety_margin =
      j.contains("safety_margin") ? number(j, "safety_margin") : kDefaultSafetyMargin;
  spec.seed = optional_field<std::uint64_t>(j, "seed", 0);
  return spec;
}

std::string serialize_problem(const ProblemSpec& spec) {
  Json j;
  j["points"] = Json::array();
  for (const auto& p : spec.points) {
    j["points"].push_back({{"theta", p.theta}, {"value_re", p.value_re}, {"value_im", p.value_im}});
  }
  j["eta"] = spec.eta;
  j["n_max"] = spec.n_max;
  j["grid_size"] = spec.grid_size;
  j["safety_margin"] = spec.safety_margin;
  j["seed"] = spec.seed;
  return j.dump(2) + "\n";
}

BoundaryData validate_problem(const ProblemSpec& spec) {
  if (spec.points.empty()) throw ValidationError("problem has no points");
  if (!(spec.eta > 0.0) || !std::isfinite(spec.eta)) throw ValidationError("eta must be positive");
  if (spec.n_max < 1) throw ValidationError("n_max must be at least 1");
  if (spec.grid_size < 4096) throw ValidationError("grid_size must be at least 4096");
  if (!(spec.safety_margin > 0.0) || !std::isfinite(spec.safety_margin)) {
    throw ValidationError("safety_margin must be positive");
  }
  std::vector<double> thetas;
  std::vector<std::complex<double>> values;
  for (const auto& p : spec.points) {
    thetas.push_back(p.theta);
    values.emplace_back(p.value_re, p.value_im);
  }
  try {
    return BoundaryData::from_pairs(thetas, values);
  } catch (const std::invalid_argument& e) {
    throw ValidationError(e.what());
  }
}

std::vector<double> parse_peaks(std::string_view text) {
  const Json j = parse_json(text, "peaks file");
  require_object(j, "peaks file");
  if (!j.contains("peaks") || !j.at("peaks").is_array()) {
    throw ParseError("field 'peaks' must be an array");
  }
  std::vector<double> out;
  for (const auto& v : j.at("peaks")) {
    if (!v.is_number()) throw ParseError("peaks must be numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

CertificateFile make_certificate(const ProblemSpec& spec, const Interpolant& g,
                                 const VerificationReport& report) {
  CertificateFile c;
  c.seed = spec.seed;
  c.n_max = spec.n_max;
  c.bounds = g.certificate;
  for (const auto& h : g.stages) {
    c.stages.push_back({h.epsilon(), h.power(), h.clustering().size(), h.normalization,
                        h.input_sup_norm, h.certified_sup, h.certified_residual});
  }
  c.report = report;
  return c;
}

std::string serialize_certificate(const CertificateFile& cert) {
  Json j;
  j["seed"] = cert.seed;
  j["n_max"] = cert.n_max;
  const auto& b = cert.bounds;
  j["certificate"] = {
      {"sup_norm_input", b.sup_norm_input},
      {"eta", b.eta},
      {"grid_size", b.grid_size},
      {"measured_boundary_sup", b.measured_boundary_sup},
      {"residual_bound_theoretical", b.residual_bound_theoretical},
      {"measured_max_residual_on_E", b.measured_max_residual_on_E},
      {"safety_margin", b.safety_margin},
  };
  j["stages"] = Json::array();
  for (const auto& s : cert.stages) {
    j["stages"].push_back({
        {"epsilon", s.epsilon},
        {"power", s.power},
        {"clusters", s.clusters},
        {"normalization", s.normalization},
        {"input_sup_norm", s.input_sup_norm},
        {"certified_sup", s.certified_sup},
        {"certified_residual", s.certified_residual},
    });
  }
  Json checks = Json::array();
  for (const auto& c : cert.report.checks) checks.push_back(check_to_json(c));
  j["report"] = {{"overall", cert.report.overall()}, {"checks", std::move(checks)}};
  return j.dump(2) + "\n";
}

CertificateFile parse_certificate(std::string_view text) {
  const Json j = parse_json(text, "certificate file");
  require_object(j, "certificate file");
  CertificateFile c;
  c.seed = field<std::uint64_t>(j, "seed");
  c.n_max = count(j, "n_max");

  if (!j.contains("certificate")) throw ParseError("missing field 'certificate'");
  const Json& b = j.at("certificate");
  require_object(b, "certificate");
  c.bounds.sup_norm_input = number(b, "sup_norm_input");
  c.bounds.eta = number(b, "eta");
  c.bounds.grid_size = count(b, "grid_size");
  c.bounds.measured_boundary_sup = number(b, "measured_boundary_sup");
  c.bounds.residual_bound_theoretical = number(b, "residual_bound_theoretical");
  c.bounds.measured_max_residual_on_E = number(b, "measured_max_residual_on_E");
  c.bounds.safety_margin = number(b, "safety_margin");

  if (!j.contains("stages") || !j.at("stages").is_array()) {
    throw ParseError("field 'stages' must be an array");
  }
  for (const auto& s : j.at("stages")) {
    require_object(s, "stage");
    c.stages.push_back({number(s, "epsilon"), field<std::int64_t>(s, "power"), count(s, "clusters"),
                        number(s, "normalization"), number(s, "input_sup_norm"),
                        number(s, "certified_sup"), number(s, "certified_residual")});
  }

  if (!j.contains("report")) throw ParseError("missing field 'report'");
  const Json& r = j.at("report");
  require_object(r, "report");
  if (!r.contains("checks") || !r.at("checks").is_array()) {
    throw ParseError("field 'report.checks' must be an array");
  }
  for (const auto& chk : r.at("checks")) c.report.checks.push_back(check_from_json(chk));
  if (field<bool>(r, "overall") != c.report.overall()) {
    throw ParseError("report.overall disagrees with its checks");
  }
  return c;
}

std::string first_mismatch(std::string_view stored, std::string_view fresh, double tol) {
  std::string out;
  diff(parse_json(stored, "stored certificate"), parse_json(fresh, "fresh certificate"), "", tol,
       out);
  return out;
}

std::string grid_csv(std::span<const double> thetas, std::span<const std::complex<double>> values) {
  std::string out = "theta,re,im,abs\n";
  char buf[128];
  for (std::size_t i = 0; i < thetas.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", thetas[i], values[i].real(),
                  values[i].imag(), std::abs(values[i]));
    out += buf;
  }
  return out;
}

}  // namespace diskinterp::io
