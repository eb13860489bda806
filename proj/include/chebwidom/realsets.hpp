#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace chebwidom {

/// Closed band [lo, hi] with lo < hi.
struct Band {
  double lo;
  double hi;

  double length() const { return hi - lo; }
  double mid() const { return 0.5 * (lo + hi); }
  double half() const { return 0.5 * (hi - lo); }
  bool operator==(const Band&) const = default;
};

/// Open gap (left, right) between two consecutive bands.
struct Gap {
  double left;
  double right;

  double length() const { return right - left; }
  bool operator==(const Gap&) const = default;
};

/// Convex hull [lo, hi] of a set, with the affine map onto [-1, 1].
struct Hull {
  double lo;
  double hi;

  double length() const { return hi - lo; }
  double mid() const { return 0.5 * (lo + hi); }
  double half() const { return 0.5 * (hi - lo); }
  double to_unit(double x) const { return (2.0 * x - (lo + hi)) / (hi - lo); }
  double from_unit(double s) const { return mid() + half() * s; }
  bool operator==(const Hull&) const = default;
};

/// Finite union of disjoint, sorted, nondegenerate closed intervals.
/// Immutable once built.
class IntervalSet {
 public:
  /// Sorts, merges touching or overlapping intervals and checks the invariants.
  /// Throws Error{EmptyInput} or Error{DegenerateBand}.
  static IntervalSet validate(std::span<const std::pair<double, double>> raw);
  static IntervalSet validate(std::initializer_list<std::pair<double, double>> raw);

  std::span<const Band> bands() const { return bands_; }
  const Band& band(std::size_t k) const { return bands_[k]; }
  std::size_t size() const { return bands_.size(); }

  Hull hull() const { return {bands_.front().lo, bands_.back().hi}; }
  std::vector<Gap> gaps() const;

  /// dist(x, set) <= tol.
  bool contains(double x, double tol = 0.0) const;
  /// Index of the band holding x (closed bands), if any.
  std::optional<std::size_t> band_of(double x) const;
  /// Index of the gap holding x (open gaps), if any.
  std::optional<std::size_t> gap_of(double x) const;

  double total_length() const;

  /// Image under x -> scale * x + shift (scale > 0).
  IntervalSet affine(double scale, double shift) const;
  /// True if the set is invariant under x -> -x up to tol.
  bool symmetric(double tol = 1e-14) const;

  std::vector<std::pair<double, double>> as_pairs() const;

  bool operator==(const IntervalSet&) const = default;

 private:
  explicit IntervalSet(std::vector<Band> bands) : bands_(std::move(bands)) {}
  std::vector<Band> bands_;
};

inline IntervalSet validate_set(std::span<const std::pair<double, double>> raw) {
  return IntervalSet::validate(raw);
}
inline std::vector<Gap> gaps(const IntervalSet& set) { return set.gaps(); }
inline bool contains(const IntervalSet& set, double x, double tol) { return set.contains(x, tol); }

}  // namespace chebwidom
