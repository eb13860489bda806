#pragma once

#include <complex>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "chebwidom/chebyshev.hpp"
#include "chebwidom/realsets.hpp"
#include "chebwidom/rooted.hpp"

namespace chebwidom {

/// Band structure of a real-rooted polynomial D: the set D^{-1}([-2, 2]).
struct BandStructure {
  std::vector<double> edges;     ///< alpha_1 <= beta_1 <= ... <= beta_n, 2n values
  std::vector<double> critical;  ///< zeros of D', n-1 values
  std::vector<bool> closed;      ///< per critical point: gap closed (|D| = 2 there)
  IntervalSet bands;             ///< closed gaps merged
};

/// Finds D = +-2 on each monotone segment between critical points. A gap is
/// taken as closed when |D(y)| - 2 <= closed_tol at its critical point y.
/// A critical value inside (-2, 2) throws EdgeCountMismatch when strict, and
/// otherwise just merges the neighbouring bands.
BandStructure extract_bands(const RootedPoly& d, double closed_tol, bool strict = true);

struct BandMasses {
  std::vector<double> band;        ///< per unmerged band [alpha_j, beta_j]
  std::vector<double> left_half;   ///< [alpha_j, eta_j]
  std::vector<double> right_half;  ///< [eta_j, beta_j]
};

struct GapMass {
  double mass = 0.0;            ///< rho_n(K intersected with e_n)
  double width = 0.0;           ///< |K intersected with e_n|
  bool single_interval = true;
  bool has_zero = false;
  bool ambiguous = false;       ///< a zero of T_n within 1e-9 hull lengths of an end of K
  std::optional<double> zero;
};

/// Delta_n = 2 T_n / ||T_n|| with its envelope set e_n and closed-form
/// potential theory. Immutable.
class DiscriminantFrame {
 public:
  explicit DiscriminantFrame(const ChebyshevResult& source);

  int n() const { return n_; }
  const ChebyshevResult& source() const { return *source_; }
  const RootedPoly& delta() const { return delta_; }
  /// Delta_n in the hull Chebyshev basis of the source set.
  Poly delta_poly() const;
  const IntervalSet& bands() const { return structure_.bands; }
  const std::vector<double>& edges() const { return structure_.edges; }
  const std::vector<double>& zeros() const { return source_->zeros; }
  const std::vector<double>& critical() const { return structure_.critical; }
  /// Critical points of Delta_n in the open gaps of e_n.
  std::vector<double> interior_critical() const;

  LogValue delta_log(double x) const { return delta_.log_value(x); }
  double delta_value(double x) const { return delta_(x); }
  std::complex<double> delta_value(std::complex<double> z) const { return delta_(z); }

  /// (1/n) log|Delta/2 + sqrt((Delta/2)^2 - 1)| on the branch with modulus >= 1.
  double green(std::complex<double> z) const;
  /// log B_n(z)^{-n}; real part is n G_n(z).
  std::complex<double> log_bn_inverse(std::complex<double> z) const;
  /// (B_n^n, B_n^{-n}); OnSpectrum within tol of e_n.
  std::pair<std::complex<double>, std::complex<double>> bn_powers(std::complex<double> z,
                                                                  double tol = 1e-12) const;

  /// (||T_n|| / 2)^{1/n}.
  double envelope_capacity() const;
  double log_envelope_capacity() const;

  /// Equilibrium density of e_n from |Delta'| / (pi n sqrt(4 - Delta^2)).
  double density(double x) const;
  /// Same density from the product over e_n's edges and interior critical points.
  double density_product(double x) const;
  /// rho_n([u, v]) by quadrature of density_product.
  double measure(double u, double v) const;

  /// Band and half-band masses from the angle theta = arccos(Delta/2).
  BandMasses band_masses() const;
  /// The same masses by quadrature of the density.
  BandMasses band_masses_quadrature() const;

  GapMass gap_mass(const Gap& gap) const;

 private:
  double integrate_density(double u, double v) const;

  std::shared_ptr<const ChebyshevResult> source_;
  int n_;
  RootedPoly delta_;
  BandStructure structure_;
  std::vector<double> outer_edges_;   // edges of e_n after merging
  std::vector<double> open_critical_; // critical points in open gaps
};

inline DiscriminantFrame build_frame(const ChebyshevResult& r) { return DiscriminantFrame(r); }

struct GapBandSample {
  int n;
  double width;
  double mass;
  std::optional<double> zero;
};

/// Width of K intersected with e_n along a list of degrees.
std::vector<GapBandSample> gap_band_width(ChebyshevSolver& solver, const Gap& gap,
                                          const std::vector<int>& n_list);

/// C(g) - C(e_n) for the supersets g = (lambda Delta_n)^{-1}([-2, 2]), lambda in
/// (0, 1]; capacities from the potential module. Every entry should be >= 0.
std::vector<double> minimality_slack(const DiscriminantFrame& frame,
                                     const std::vector<double>& lambdas);

}  // namespace chebwidom
