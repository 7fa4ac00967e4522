#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "diskinterp/circle.hpp"
#include "diskinterp/interpolate.hpp"
#include "diskinterp/verify.hpp"

namespace diskinterp::io {

/// Malformed input text: bad JSON, wrong types, missing keys.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Well-formed input whose values violate an invariant.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Overrides the default boundary grid size when set to an integer >= 4096.
inline constexpr const char* kGridSizeEnv = "DISKINTERP_GRID_SIZE";

/// 65536 unless overridden through kGridSizeEnv.
std::size_t default_grid_size();

inline constexpr std::size_t kDefaultNMax = 20;
inline constexpr double kDefaultSafetyMargin = 1e-12;

struct ProblemPoint {
  double theta = 0.0;
  double value_re = 0.0;
  double value_im = 0.0;

  friend bool operator==(const ProblemPoint&, const ProblemPoint&) = default;
};

/// Interpolation problem: data (E, f) plus pipeline and audit parameters.
struct ProblemSpec {
  std::vector<ProblemPoint> points;
  double eta = 0.0;
  std::size_t n_max = kDefaultNMax;
  std::size_t grid_size = 1u << 16;
  double safety_margin = kDefaultSafetyMargin;
  std::uint64_t seed = 0;

  friend bool operator==(const ProblemSpec&, const ProblemSpec&) = default;
};

/// JSON object with keys points, eta and optionally n_max, grid_size,
/// safety_margin, seed. Missing optional keys take their defaults.
ProblemSpec parse_problem(std::string_view text);
std::string serialize_problem(const ProblemSpec& spec);

/// Throws ValidationError unless points are non-empty and distinct, eta > 0,
/// n_max >= 1, grid_size >= 4096 and safety_margin > 0.
BoundaryData validate_problem(const ProblemSpec& spec);

/// {"peaks": [theta, ...]}; angles in radians.
std::vector<double> parse_peaks(std::string_view text);

struct StageSummary {
  double epsilon = 0.0;
  std::int64_t power = 0;
  std::size_t clusters = 0;
  double normalization = 0.0;
  double input_sup_norm = 0.0;
  double certified_sup = 0.0;
  double certified_residual = 0.0;

  friend bool operator==(const StageSummary&, const StageSummary&) = default;
};

/// Everything `interpolate` records and `verify` reproduces.
struct CertificateFile {
  std::uint64_t seed = 0;
  std::size_t n_max = 0;
  BoundsCertificate bounds;
  std::vector<StageSummary> stages;
  VerificationReport report;

  friend bool operator==(const CertificateFile&, const CertificateFile&) = default;
};

CertificateFile make_certificate(const ProblemSpec& spec, const Interpolant& g,
                                 const VerificationReport& report);

/// Keys in fixed order, doubles in shortest round-trip form.
std::string serialize_certificate(const CertificateFile& cert);
CertificateFile parse_certificate(std::string_view text);

/// Path of the first leaf where the two certificate texts disagree: numbers
/// beyond `tol`, or any other value or structural difference. Empty if none.
std::string first_mismatch(std::string_view stored, std::string_view fresh, double tol);

/// `theta,re,im,abs` header, one row per theta, 17 significant digits.
std::string grid_csv(std::span<const double> thetas,
                     std::span<const std::complex<double>> values);

}  // namespace diskinterp::io
