#include "chebwidom/rooted.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "chebwidom/quadrature.hpp"

namespace chebwidom {

RootedPoly::RootedPoly(std::vector<double> roots, double log_lead, int lead_sign)
    : roots_(std::move(roots)), log_lead_(log_lead), lead_sign_(lead_sign < 0 ? -1 : 1) {
  std::sort(roots_.begin(), roots_.end());
}

LogValue RootedPoly::log_value(double x) const {
  double acc = log_lead_;
  int sign = lead_sign_;
  for (double r : roots_) {
    const double d = x - r;
    if (d == 0.0) return {-std::numeric_limits<double>::infinity(), 0};
    acc += std::log(std::abs(d));
    if (d < 0) sign = -sign;
  }
  return {acc, sign};
}

std::complex<double> RootedPoly::log_value(std::complex<double> z) const {
  std::complex<double> acc(log_lead_, lead_sign_ < 0 ? std::numbers::pi : 0.0);
  for (double r : roots_) acc += std::log(z - r);
  return acc;
}

double RootedPoly::log_derivative(double x) const {
  double s = 0.0;
  for (double r : roots_) s += 1.0 / (x - r);
  return s;
}

std::complex<double> RootedPoly::log_derivative(std::complex<double> z) const {
  std::complex<double> s = 0.0;
  for (double r : roots_) s += 1.0 / (z - r);
  return s;
}

std::vector<double> RootedPoly::critical_points() const {
  std::vector<double> out;
  if (roots_.size() < 2) return out;
  out.reserve(roots_.size() - 1);
  auto f = [this](double x) { return log_derivative(x); };
  for (std::size_t k = 0; k + 1 < roots_.size(); ++k) {
    const double lo = roots_[k], hi = roots_[k + 1];
    const double a = std::nextafter(lo, hi);
    const double b = std::nextafter(hi, lo);
    if (!(a < b)) {
      out.push_back(0.5 * (lo + hi));
      continue;
    }
    // Between consecutive roots P'/P falls monotonically from +inf to -inf.
    out.push_back(quad::bisect(f, a, b, 1.0, -1.0));
  }
  return out;
}

RootedPoly RootedPoly::scaled(double log_delta) const {
  RootedPoly r = *this;
  r.log_lead_ += log_delta;
  return r;
}

Poly RootedPoly::to_poly(Hull hull) const {
  auto f = [this](double x) { return log_value(x); };
  return Poly::interpolate(hull, degree(), f, log_lead_ == 0.0 && lead_sign_ == 1);
}

}  // namespace chebwidom
