#include "romscarf/fdoracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace romscarf {

namespace {

// Number of eigenvalues strictly below x, from the sign pattern of the
// LDL^T pivots of (T - x I).
int count_below(const std::vector<double>& diag, double off2, double x) {
  int count = 0;
  double q = diag[0] - x;
  if (q < 0) ++count;
  for (size_t i = 1; i < diag.size(); ++i) {
    double prev = (q != 0.0) ? q : 1e-300;
    q = diag[i] - x - off2 / prev;
    if (q < 0) ++count;
  }
  return count;
}

std::vector<double> eigenvalues_impl(const std::function<double(double)>& v, const FDGrid& grid,
                                     int k, bool parallel) {
  if (grid.interior < 3) throw std::domain_error("fd_eigenvalues: need at least 3 interior points");
  if (k < 1 || k > grid.interior)
    throw std::domain_error("fd_eigenvalues: k must satisfy 1 <= k <= N");
  double h = grid.spacing();
  double off = -1.0 / (h * h);
  double off2 = off * off;

  std::vector<double> diag(static_cast<size_t>(grid.interior));
  for (int i = 0; i < grid.interior; ++i) {
    double vi = v(grid.point(i));
    if (!std::isfinite(vi)) throw std::runtime_error("fd_eigenvalues: non-finite potential sample");
    diag[static_cast<size_t>(i)] = 2.0 / (h * h) + vi;
  }

  double lo0 = diag[0], hi0 = diag[0];
  for (double di : diag) {
    lo0 = std::min(lo0, di);
    hi0 = std::max(hi0, di);
  }
  lo0 -= 2.0 * std::abs(off);
  hi0 += 2.0 * std::abs(off);
  double scale = std::max({1.0, std::abs(lo0), std::abs(hi0)});
  double tol = 1e-13 * scale;

  std::vector<double> eig(static_cast<size_t>(k));
  auto bisect = [&](int j) {
    double lo = lo0, hi = hi0;
    while (hi - lo > tol) {
      double mid = 0.5 * (lo + hi);
      if (count_below(diag, off2, mid) > j)
        hi = mid;
      else
        lo = mid;
    }
    return 0.5 * (lo + hi);
  };

  if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (int j = 0; j < k; ++j) eig[static_cast<size_t>(j)] = bisect(j);
  } else {
    for (int j = 0; j < k; ++j) eig[static_cast<size_t>(j)] = bisect(j);
  }
  return eig;
}

}  // namespace

std::vector<double> fd_eigenvalues(const std::function<double(double)>& v, const FDGrid& grid,
                                   int k) {
  return eigenvalues_impl(v, grid, k, true);
}

std::vector<double> fd_eigenvalues_serial(const std::function<double(double)>& v,
                                          const FDGrid& grid, int k) {
  return eigenvalues_impl(v, grid, k, false);
}

SpectrumReport compare_spectrum(const ScarfParams& params, const FDGrid& grid, int k) {
  auto levels = spectrum_ii(params);
  if (k < 1 || static_cast<size_t>(k) > levels.size())
    throw std::domain_error("compare_spectrum: k exceeds the bound-state count");
  levels.resize(static_cast<size_t>(k));

  auto v = [&](double z) { return potential_ii(params, z); };
  auto coarse = fd_eigenvalues(v, grid, k);
  FDGrid halved{grid.half_width, 2 * grid.interior + 1};  // exactly h/2
  auto fine = fd_eigenvalues(v, halved, k);

  SpectrumReport report;
  report.analytic = levels;
  report.raw = coarse;
  report.numeric.reserve(static_cast<size_t>(k));
  report.deviations.reserve(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) {
    double extrapolated =
        (4.0 * fine[static_cast<size_t>(i)] - coarse[static_cast<size_t>(i)]) / 3.0;
    report.numeric.push_back(extrapolated);
    double dev = std::abs(extrapolated - levels[static_cast<size_t>(i)].e.to_double());
    report.deviations.push_back(dev);
    report.max_deviation = std::max(report.max_deviation, dev);
  }
  return report;
}

}  // namespace romscarf
