#pragma once

#include <complex>
#include <span>

namespace chebwidom {
class Expansion;
class EquilibriumData;
}  // namespace chebwidom

/// Batch evaluations behind the grid scans. Each kernel has an OpenMP version
/// and a plain loop kept as the reference; both must give identical results.
namespace chebwidom::kernels {

/// Values and derivatives of the raw expansion sum at each x.
void expansion_grid(const Expansion& e, std::span<const double> x, std::span<double> v,
                    std::span<double> dv);
void expansion_grid_serial(const Expansion& e, std::span<const double> x, std::span<double> v,
                           std::span<double> dv);

/// Green's function at each z.
void green_grid(const EquilibriumData& eq, std::span<const std::complex<double>> z,
                std::span<double> g);
void green_grid_serial(const EquilibriumData& eq, std::span<const std::complex<double>> z,
                       std::span<double> g);

}  // namespace chebwidom::kernels
