#include "chebwidom/kernels.hpp"

#include <cstddef>

#include "chebwidom/orthobasis.hpp"
#include "chebwidom/potential.hpp"

namespace chebwidom::kernels {

void expansion_grid(const Expansion& e, std::span<const double> x, std::span<double> v,
                    std::span<double> dv) {
  const std::ptrdiff_t m = static_cast<std::ptrdiff_t>(x.size());
#pragma omp parallel for schedule(static) if (m > 2048)
  for (std::ptrdiff_t i = 0; i < m; ++i) e.raw_value_deriv(x[i], v[i], dv[i]);
}

void expansion_grid_serial(const Expansion& e, std::span<const double> x, std::span<double> v,
                           std::span<double> dv) {
  for (std::size_t i = 0; i < x.size(); ++i) e.raw_value_deriv(x[i], v[i], dv[i]);
}

void green_grid(const EquilibriumData& eq, std::span<const std::complex<double>> z,
                std::span<double> g) {
  const std::ptrdiff_t m = static_cast<std::ptrdiff_t>(z.size());
#pragma omp parallel for schedule(dynamic, 16) if (m > 64)
  for (std::ptrdiff_t i = 0; i < m; ++i) g[i] = eq.green(z[i]);
}

void green_grid_serial(const EquilibriumData& eq, std::span<const std::complex<double>> z,
                       std::span<double> g) {
  for (std::size_t i = 0; i < z.size(); ++i) g[i] = eq.green(z[i]);
}

}  // namespace chebwidom::kernels
