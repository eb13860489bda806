#include "chebwidom/realsets.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "chebwidom/errors.hpp"

namespace chebwidom {

IntervalSet IntervalSet::validate(std::span<const std::pair<double, double>> raw) {
  if (raw.empty()) throw Error(Errc::EmptyInput, "set has no bands");
  std::vector<Band> sorted;
  sorted.reserve(raw.size());
  for (auto [a, b] : raw) {
    if (!std::isfinite(a) || !std::isfinite(b))
      throw Error(Errc::DegenerateBand, "non-finite endpoint");
    sorted.push_back({a, b});
  }
  std::sort(sorted.begin(), sorted.end(), [](const Band& x, const Band& y) {
    return x.lo < y.lo || (x.lo == y.lo && x.hi < y.hi);
  });

  std::vector<Band> merged;
  for (const Band& b : sorted) {
    if (!merged.empty() && b.lo <= merged.back().hi)
      merged.back().hi = std::max(merged.back().hi, b.hi);
    else
      merged.push_back(b);
  }
  for (const Band& b : merged) {
    if (!(b.lo < b.hi))
      throw Error(Errc::DegenerateBand,
                  "band [" + std::to_string(b.lo) + ", " + std::to_string(b.hi) + "] has no interior");
  }
  return IntervalSet(std::move(merged));
}

IntervalSet IntervalSet::validate(std::initializer_list<std::pair<double, double>> raw) {
  return validate(std::span<const std::pair<double, double>>(raw.begin(), raw.size()));
}

std::vector<Gap> IntervalSet::gaps() const {
  std::vector<Gap> out;
  for (std::size_t k = 0; k + 1 < bands_.size(); ++k)
    out.push_back({bands_[k].hi, bands_[k + 1].lo});
  return out;
}

bool IntervalSet::contains(double x, double tol) const {
  for (const Band& b : bands_) {
    if (x >= b.lo - tol && x <= b.hi + tol) return true;
  }
  return false;
}

std::optional<std::size_t> IntervalSet::band_of(double x) const {
  for (std::size_t k = 0; k < bands_.size(); ++k) {
    if (x >= bands_[k].lo && x <= bands_[k].hi) return k;
  }
  return std::nullopt;
}

std::optional<std::size_t> IntervalSet::gap_of(double x) const {
  for (std::size_t k = 0; k + 1 < bands_.size(); ++k) {
    if (x > bands_[k].hi && x < bands_[k + 1].lo) return k;
  }
  return std::nullopt;
}

double IntervalSet::total_length() const {
  double sum = 0.0;
  for (const Band& b : bands_) sum += b.length();
  return sum;
}

IntervalSet IntervalSet::affine(double scale, double shift) const {
  std::vector<Band> out;
  out.reserve(bands_.size());
  for (const Band& b : bands_) out.push_back({scale * b.lo + shift, scale * b.hi + shift});
  return IntervalSet(std::move(out));
}

bool IntervalSet::symmetric(double tol) const {
  const std::size_t p = bands_.size();
  for (std::size_t k = 0; k < p; ++k) {
    const Band& b = bands_[k];
    const Band& m = bands_[p - 1 - k];
    if (std::abs(b.lo + m.hi) > tol || std::abs(b.hi + m.lo) > tol) return false;
  }
  return true;
}

std::vector<std::pair<double, double>> IntervalSet::as_pairs() const {
  std::vector<std::pair<double, double>> out;
  for (const Band& b : bands_) out.emplace_back(b.lo, b.hi);
  return out;
}

}  // namespace chebwidom
