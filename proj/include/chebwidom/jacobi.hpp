#pragma once

#include <complex>
#include <vector>

#include "chebwidom/bands.hpp"
#include "chebwidom/poly.hpp"
#include "chebwidom/realsets.hpp"
#include "chebwidom/rooted.hpp"

namespace chebwidom {

/// Period-p Jacobi parameters a_1..a_p > 0, b_1..b_p, extended periodically.
struct JacobiParams {
  std::vector<double> a;
  std::vector<double> b;

  int period() const { return static_cast<int>(a.size()); }
  /// Throws InvalidArgument unless sizes match, p >= 1, a_j > 0 and all finite.
  void validate() const;
  double log_a_product() const;
};

struct Mat2 {
  std::complex<double> m00, m01, m10, m11;

  std::complex<double> trace() const { return m00 + m11; }
  std::complex<double> det() const { return m00 * m11 - m01 * m10; }
};

/// M_p(z) = A_p(z) ... A_1(z), A_j(z) = (1/a_j) [[z - b_j, -1], [a_j^2, 0]].
Mat2 transfer_matrix(const JacobiParams& params, std::complex<double> z);
/// tr M_p(z).
std::complex<double> discriminant(const JacobiParams& params, std::complex<double> z);
/// (Delta(x), Delta'(x)) for real x.
std::pair<double, double> discriminant_with_derivative(const JacobiParams& params, double x);

/// Radius bounding the spectrum: max|b_j| + 2 max a_j + 1.
double spectral_radius_bound(const JacobiParams& params);
/// Delta interpolated in the Chebyshev basis of [-R, R].
Poly discriminant_poly(const JacobiParams& params);
/// The p real zeros of Delta: colleague-matrix eigenvalues, Newton-polished.
std::vector<double> discriminant_zeros(const JacobiParams& params);
/// Delta in product form, lead (a_1...a_p)^{-1}.
RootedPoly discriminant_product(const JacobiParams& params);

/// Delta^{-1}([-2, 2]) with closed gaps merged.
IntervalSet spectrum(const JacobiParams& params);
BandStructure spectrum_structure(const JacobiParams& params);

struct IdentityReport {
  IntervalSet spectrum;
  double coefficient_residual;  ///< relative, hull Chebyshev basis
  double capacity_residual;     ///< |(a_1...a_p)^{1/p} - C(e)|
  double edge_residual;         ///< e_p of T_p against the spectrum
  bool pass;
};

/// Checks that (a_1...a_p) Delta is the Chebyshev polynomial of its spectrum.
IdentityReport chebyshev_identity_check(const JacobiParams& params, double tol);

}  // namespace chebwidom
