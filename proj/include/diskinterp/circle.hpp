#pragma once

#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <utility>
#include <vector>

namespace diskinterp {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Smallest admissible angular gap between two points of a boundary set.
inline constexpr double kMinSeparation = 1e-12;

/// A point of the unit circle, stored as its angle in [0, 2pi).
class Angle {
 public:
  constexpr Angle() = default;

  /// Reduces `theta` modulo 2pi. Throws InvalidArgument on non-finite input.
  static Angle normalized(double theta);

  [[nodiscard]] constexpr double radians() const noexcept { return theta_; }
  /// exp(i theta). Angles above pi go through their exact mirror 2pi - theta,
  /// so mirrored angles give bitwise conjugate points.
  [[nodiscard]] std::complex<double> point() const {
    return theta_ <= std::numbers::pi ? std::polar(1.0, theta_)
                                      : std::conj(std::polar(1.0, 2.0 * std::numbers::pi - theta_));
  }

  /// Rotation by `phi` radians, renormalized.
  [[nodiscard]] Angle rotated(double phi) const { return normalized(theta_ + phi); }

  friend constexpr auto operator<=>(Angle, Angle) = default;

 private:
  constexpr explicit Angle(double theta) : theta_(theta) {}
  double theta_ = 0.0;
};

Angle normalize_angle(double theta);

/// Shortest distance along the circle, in [0, pi].
double angular_distance(Angle a, Angle b) noexcept;

/// Counter-clockwise travel from `from` to `to`, in [0, 2pi).
double ccw_distance(Angle from, Angle to) noexcept;

/// Open arc {theta : angular_distance(theta, center) < half_width}.
class Arc {
 public:
  /// Throws InvalidArgument unless 0 < half_width < pi.
  Arc(Angle center, double half_width);

  [[nodiscard]] Angle center() const noexcept { return center_; }
  [[nodiscard]] double half_width() const noexcept { return half_width_; }
  [[nodiscard]] bool contains(Angle theta) const noexcept {
    return angular_distance(theta, center_) < half_width_;
  }
  /// Clockwise and counter-clockwise endpoints.
  [[nodiscard]] Angle lower() const { return center_.rotated(-half_width_); }
  [[nodiscard]] Angle upper() const { return center_.rotated(half_width_); }

 private:
  Angle center_;
  double half_width_;
};

/// Non-empty finite set of distinct points on the unit circle, sorted by angle.
class FiniteBoundarySet {
 public:
  /// Normalizes and sorts. Throws InvalidArgument if empty, non-finite or if
  /// two points are closer than kMinSeparation.
  explicit FiniteBoundarySet(std::span<const double> thetas);
  explicit FiniteBoundarySet(std::vector<Angle> points);

  [[nodiscard]] std::size_t size() const noexcept { return points_.size(); }
  [[nodiscard]] std::span<const Angle> points() const noexcept { return points_; }
  [[nodiscard]] Angle operator[](std::size_t i) const { return points_[i]; }
  [[nodiscard]] double min_gap() const noexcept { return min_gap_; }

 private:
  void validate();

  std::vector<Angle> points_;
  double min_gap_ = kTwoPi;
};

/// Complex data on a finite boundary set, with its sup norm.
class BoundaryData {
 public:
  /// `values[i]` belongs to `set[i]` (the set's sorted order).
  BoundaryData(FiniteBoundarySet set, std::vector<std::complex<double>> values);

  /// Builds from unsorted (angle, value) pairs; values follow their angles.
  static BoundaryData from_pairs(std::span<const double> thetas,
                                 std::span<const std::complex<double>> values);

  [[nodiscard]] const FiniteBoundarySet& set() const noexcept { return set_; }
  [[nodiscard]] std::span<const std::complex<double>> values() const noexcept { return values_; }
  [[nodiscard]] std::complex<double> value(std::size_t i) const { return values_[i]; }
  [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
  [[nodiscard]] double sup_norm() const noexcept { return sup_norm_; }

  /// Same set, new values.
  [[nodiscard]] BoundaryData with_values(std::vector<std::complex<double>> values) const;

 private:
  FiniteBoundarySet set_;
  std::vector<std::complex<double>> values_;
  double sup_norm_ = 0.0;
};

struct Cluster {
  std::vector<std::size_t> members;  // indices into the set, counter-clockwise order
  std::size_t representative;        // index into the set
  Arc arc;
};

/// Partition of a boundary set into groups of small data oscillation lying on
/// pairwise disjoint open arcs.
struct Clustering {
  std::vector<Cluster> clusters;
  double oscillation_bound = 0.0;

  [[nodiscard]] std::size_t size() const noexcept { return clusters.size(); }
};

/// Greedy circular sweep. The sweep starts after the widest gap of the set and
/// a point joins the current cluster iff the cluster's pairwise oscillation
/// stays below `epsilon`; the last and first clusters merge when their union
/// still satisfies the bound. Throws InvalidArgument if epsilon <= 0.
Clustering cluster_by_oscillation(const BoundaryData& data, double epsilon);

/// Representative t_k of cluster k and f(t_k). Throws std::out_of_range.
std::pair<Angle, std::complex<double>> representative_of(const Clustering& clustering,
                                                         const BoundaryData& data,
                                                         std::size_t k);

}  // namespace diskinterp
