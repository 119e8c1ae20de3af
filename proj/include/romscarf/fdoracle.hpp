#pragma once

#include <functional>
#include <vector>

#include "romscarf/scarf.hpp"

namespace romscarf {

/// Uniform Dirichlet grid on [-L, L] with N interior points, h = 2L/(N+1).
struct FDGrid {
  double half_width = 20.0;
  int interior = 4000;

  double spacing() const { return 2.0 * half_width / (interior + 1); }
  double point(int i) const { return -half_width + (i + 1) * spacing(); }

  static FDGrid defaults() { return FDGrid{}; }
};

/// Lowest k eigenvalues of -psi'' + v psi on the grid (second-order central
/// differences), by Sturm-sequence bisection on the symmetric tridiagonal
/// matrix. Deterministic and sorted ascending; brackets for distinct indices
/// are independent, so the parallel version matches the serial one bitwise.
std::vector<double> fd_eigenvalues(const std::function<double(double)>& v, const FDGrid& grid,
                                   int k);
std::vector<double> fd_eigenvalues_serial(const std::function<double(double)>& v,
                                          const FDGrid& grid, int k);

struct SpectrumReport {
  std::vector<EnergyLevel> analytic;
  std::vector<double> numeric;         // h -> 0 estimate (one Richardson step)
  std::vector<double> raw;             // plain solve on the given grid
  std::vector<double> deviations;      // |numeric[i] - analytic[i].e|
  double max_deviation = 0.0;
};

/// Analytic hyperbolic-Scarf levels against the finite-difference solver.
/// The numeric column is the Richardson combination (4 E_{h/2} - E_h)/3 of
/// two solves of the scheme above at N and 2N+1 interior points, which
/// removes the leading h^2 discretization bias; the raw grid values are
/// reported alongside.
SpectrumReport compare_spectrum(const ScarfParams& params, const FDGrid& grid, int k);

}  // namespace romscarf
