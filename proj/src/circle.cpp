#include "diskinterp/circle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "diskinterp/error.hpp"

namespace diskinterp {

Angle Angle::normalized(double theta) {
  if (!std::isfinite(theta)) throw InvalidArgument("angle must be finite");
  double t = std::fmod(theta, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  // fmod of a tiny negative value plus 2pi can round up to 2pi itself.
  if (t >= kTwoPi) t = 0.0;
  return Angle(t);
}

Angle normalize_angle(double theta) { return Angle::normalized(theta); }

double angular_distance(Angle a, Angle b) noexcept {
  const double d = std::abs(a.radians() - b.radians());
  return std::min(d, kTwoPi - d);
}

double ccw_distance(Angle from, Angle to) noexcept {
  const double d = to.radians() - from.radians();
  return d >= 0.0 ? d : d + kTwoPi;
}

Arc::Arc(Angle center, double half_width) : center_(center), half_width_(half_width) {
  if (!(half_width > 0.0 && half_width < kPi)) {
    throw InvalidArgument("arc half-width must lie in (0, pi), got " + std::to_string(half_width));
  }
}

FiniteBoundarySet::FiniteBoundarySet(std::span<const double> thetas) {
  points_.reserve(thetas.size());
  for (double t : thetas) points_.push_back(Angle::normalized(t));
  validate();
}

FiniteBoundarySet::FiniteBoundarySet(std::vector<Angle> points) : points_(std::move(points)) {
  validate();
}

void FiniteBoundarySet::validate() {
  if (points_.empty()) throw InvalidArgument("boundary set is empty");
  std::sort(points_.begin(), points_.end());
  if (points_.size() == 1) return;
  min_gap_ = kTwoPi;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const double gap = angular_distance(points_[i], points_[(i + 1) % points_.size()]);
    min_gap_ = std::min(min_gap_, gap);
  }
  if (!(min_gap_ >= kMinSeparation)) {
    throw InvalidArgument("boundary set points are not distinct (min gap " +
                          std::to_string(min_gap_) + ")");
  }
}

BoundaryData::BoundaryData(FiniteBoundarySet set, std::vector<std::complex<double>> values)
    : set_(std::move(set)), values_(std::move(values)) {
  if (values_.size() != set_.size()) {
    throw InvalidArgument("boundary data needs one value per point");
  }
  for (const auto& v : values_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw InvalidArgument("boundary data values must be finite");
    }
    sup_norm_ = std::max(sup_norm_, std::abs(v));
  }
}

BoundaryData BoundaryData::from_pairs(std::span<const double> thetas,
                                      std::span<const std::complex<double>> values) {
  if (thetas.size() != values.size()) {
    throw InvalidArgument("boundary data needs one value per point");
  }
  std::vector<std::pair<Angle, std::complex<double>>> pairs;
  pairs.reserve(thetas.size());
  for (std::size_t i = 0; i < thetas.size(); ++i) {
    pairs.emplace_back(Angle::normalized(thetas[i]), values[i]);
  }
  std::sort(pairs.begin(), pairs.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Angle> angles;
  std::vector<std::complex<double>> vals;
  for (const auto& [a, v] : pairs) {
    angles.push_back(a);
    vals.push_back(v);
  }
  return BoundaryData(FiniteBoundarySet(std::move(angles)), std::move(vals));
}

BoundaryData BoundaryData::with_values(std::vector<std::complex<double>> values) const {
  return BoundaryData(set_, std::move(values));
}

namespace {

// Arc centered on the midpoint of the cluster's extreme members, widened by a
// quarter of the smaller gap to a neighbouring point on either side.
Arc arc_for(const FiniteBoundarySet& set, const std::vector<std::size_t>& members) {
  const std::size_t m = set.size();
  const Angle first = set[members.front()];
  const Angle last = set[members.back()];
  const double extent = ccw_distance(first, last);
  double clearance;
  if (members.size() == m) {
    clearance = kTwoPi - extent;
  } else {
    const Angle before = set[(members.front() + m - 1) % m];
    const Angle after = set[(members.back() + 1) % m];
    clearance = std::min(ccw_distance(before, first), ccw_distance(last, after));
  }
  return Arc(first.rotated(0.5 * extent), 0.5 * extent + 0.25 * clearance);
}

bool fits(const BoundaryData& data, const std::vector<std::size_t>& members, std::size_t candidate,
          double epsilon) {
  const auto v = data.value(candidate);
  return std::all_of(members.begin(), members.end(),
                     [&](std::size_t i) { return std::abs(data.value(i) - v) < epsilon; });
}

}  // namespace

Clustering cluster_by_oscillation(const BoundaryData& data, double epsilon) {
  if (!(epsilon > 0.0)) throw InvalidArgument("oscillation bound must be positive");
  const auto& set = data.set();
  const std::size_t m = set.size();

  // Start right after the widest gap so the sweep is independent of where 0 lies.
  std::size_t start = 0;
  if (m > 1) {
    double widest = -1.0;
    for (std::size_t i = 0; i < m; ++i) {
      const double gap = ccw_distance(set[i], set[(i + 1) % m]);
      if (gap > widest) {
        widest = gap;
        start = (i + 1) % m;
      }
    }
  }

  std::vector<std::vector<std::size_t>> groups;
  for (std::size_t step = 0; step < m; ++step) {
    const std::size_t idx = (start + step) % m;
    if (!groups.empty() && fits(data, groups.back(), idx, epsilon)) {
      groups.back().push_back(idx);
    } else {
      groups.push_back({idx});
    }
  }

  if (groups.size() >= 2) {
    auto& last = groups.back();
    auto& first = groups.front();
    const bool merge = std::all_of(first.begin(), first.end(),
                                   [&](std::size_t i) { return fits(data, last, i, epsilon); });
    if (merge) {
      last.insert(last.end(), first.begin(), first.end());
      first = std::move(last);
      groups.pop_back();
    }
  }

  Clustering out;
  out.oscillation_bound = epsilon;
  out.clusters.reserve(groups.size());
  for (auto& g : groups) {
    Arc arc = arc_for(set, g);
    const std::size_t rep = g.front();
    out.clusters.push_back(Cluster{std::move(g), rep, arc});
  }
  return out;
}

std::pair<Angle, std::complex<double>> representative_of(const Clustering& clustering,
                                                         const BoundaryData& data,
                                                         std::size_t k) {
  if (k >= clustering.size()) {
    throw std::out_of_range("cluster index " + std::to_string(k) + " out of range");
  }
  const std::size_t i = clustering.clusters[k].representative;
  return {data.set()[i], data.value(i)};
}

}  // namespace diskinterp
