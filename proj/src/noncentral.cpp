#include "romscarf/noncentral.hpp"

#include <cmath>
#include <stdexcept>

namespace romscarf {

std::array<double, 3> AngularProblem::constraint_residuals() const {
  double r1 = l * (l + 1) + (b * b - a * (a + 1));
  double r2 = c + b * (2 * a + 1);
  double r3 = m * m - (a - n) * (a - n);
  return {r1, r2, r3};
}

AngularProblem solve_params_from_lc(double l, double c, int n) {
  if (l < 0) throw std::domain_error("solve_params: l must be >= 0");
  if (n < 0) throw std::domain_error("solve_params: n must be >= 0");
  double L = (l + 0.5) * (l + 0.5);
  double root = std::sqrt(L * L + c * c);
  double u = 0.5 * (L + root);           // (a + 1/2)^2
  double a = std::sqrt(u) - 0.5;
  double b = -c / (2 * std::sqrt(u));    // from c = -b(2a+1)
  double m = a - n;
  if (!(m > 0))
    throw std::domain_error("solve_params: n >= a leaves no positive azimuthal label m = a - n");
  return AngularProblem{ParamStrategy::FromLC, l, m, c, a, b, n};
}

AngularProblem solve_params_from_mnc(double m, int n, double c) {
  if (!(m > 0)) throw std::domain_error("solve_params: m must be > 0");
  if (n < 0) throw std::domain_error("solve_params: n must be >= 0");
  double a = m + n;
  double b = -c / (2 * (m + n) + 1);
  double radicand = 0.25 - (b * b - a * (a + 1));
  if (radicand < 0)
    throw std::domain_error("solve_params: negative radicand, no real separation label l");
  double l = -0.5 + std::sqrt(radicand);
  return AngularProblem{ParamStrategy::FromMNC, l, m, c, a, b, n};
}

AngularProblem solve_params_integer_l(int l, int m) {
  if (l < 0) throw std::domain_error("solve_params: l must be >= 0");
  double a = static_cast<double>(l) * (l + 1);
  if (m < 1 || m > l * (l + 1))
    throw std::domain_error("solve_params: integer-l strategy needs 1 <= m <= l(l+1)");
  int n = l * (l + 1) - m;
  double b = a;
  double c = -b * (2 * a + 1);
  return AngularProblem{ParamStrategy::IntegerL, static_cast<double>(l), static_cast<double>(m),
                        c, a, b, n};
}

double theta_to_z(double theta) {
  if (!(theta > 0 && theta < M_PI)) throw std::domain_error("theta_to_z: theta must be in (0, pi)");
  return std::asinh(-std::cos(theta) / std::sin(theta));
}

double z_to_theta(double z) { return std::acos(-std::tanh(z)); }

double f_of_z(double z) { return 2.0 * std::atan(std::exp(z)); }

double AngularFunction::theta_value(double theta) const {
  if (!(theta > 0 && theta < M_PI)) throw std::domain_error("theta_value: theta must be in (0, pi)");
  double x = -std::cos(theta) / std::sin(theta);
  return norm * std::pow(1.0 + x * x, -0.5 * problem.a) *
         std::exp(-problem.b * std::atan(x)) * horner(coeffs, x);
}

double AngularFunction::abs_Z(double theta, double phi) const {
  (void)phi;
  return std::abs(theta_value(theta));
}

std::complex<double> AngularFunction::Z(double theta, double phi) const {
  return theta_value(theta) * std::exp(std::complex<double>(0.0, problem.m * phi));
}

AngularFunction angular_function(const AngularProblem& problem) {
  if (problem.n < 0) throw std::domain_error("angular_function: polynomial degree must be >= 0");
  AngularFunction fn;
  fn.problem = problem;
  fn.coeffs = romanovski_real(problem.a + 0.5, -2.0 * problem.b, problem.n);

  // integral over (0, pi) of Theta^2 sin(theta) equals the x-line integral of
  // g(x)^2 (1+x^2)^{-3/2} with g the unnormalized arctan-family value.
  auto g = [&](double x) {
    return std::pow(1.0 + x * x, -0.5 * problem.a) * std::exp(-problem.b * std::atan(x)) *
           horner(fn.coeffs, x);
  };
  auto integrand = [&](double x) {
    double v = g(x);
    return v * v * std::pow(1.0 + x * x, -1.5);
  };
  double norm2 = integrate_line(integrand, QuadratureSpec::defaults()).value;
  fn.norm = 1.0 / std::sqrt(norm2);
  return fn;
}

SU11Labels su11_labels(const AngularProblem& problem) {
  SU11Labels labels;
  labels.mprime = problem.a + 0.5;
  labels.j = labels.mprime - problem.n;
  return labels;
}

double su11_energy(const SU11Labels& labels) {
  return -(labels.j - 0.5) * (labels.j - 0.5);
}

double assoc_legendre(int l, int m, double x) {
  if (m < 0 || m > l) throw std::domain_error("assoc_legendre: need 0 <= m <= l");
  double pmm = 1.0;
  if (m > 0) {
    double somx2 = std::sqrt(std::max(0.0, (1.0 - x) * (1.0 + x)));
    double fact = 1.0;
    for (int i = 1; i <= m; ++i) {
      pmm *= fact * somx2;
      fact += 2.0;
    }
  }
  if (l == m) return pmm;
  double pmmp1 = x * (2 * m + 1) * pmm;
  if (l == m + 1) return pmmp1;
  double pll = 0.0;
  for (int ll = m + 2; ll <= l; ++ll) {
    pll = (x * (2 * ll - 1) * pmmp1 - (ll + m - 1) * pmm) / (ll - m);
    pmm = pmmp1;
    pmmp1 = pll;
  }
  return pll;
}

BridgeReport legendre_bridge(int l, int m, double theta_margin, int samples) {
  if (m < 0 || m > l) throw std::domain_error("legendre_bridge: need 0 <= m <= l");
  if (samples < 8) throw std::domain_error("legendre_bridge: too few samples");
  RomanovskiParams rp(Rational(l) + Rational(1, 2), Rational(0));
  auto rn = to_double_coeffs(romanovski(rp, l - m).poly);

  std::vector<double> lhs(static_cast<size_t>(samples)), rhs(static_cast<size_t>(samples));
  double rhs_max = 0.0;
  for (int i = 0; i < samples; ++i) {
    double theta = theta_margin + (M_PI - 2 * theta_margin) * (i + 0.5) / samples;
    double x = -std::cos(theta) / std::sin(theta);
    lhs[static_cast<size_t>(i)] = assoc_legendre(l, m, std::cos(theta));
    rhs[static_cast<size_t>(i)] = std::pow(1.0 + x * x, -0.5 * l) * horner(rn, x);
    rhs_max = std::max(rhs_max, std::abs(rhs[static_cast<size_t>(i)]));
  }

  // Both sides share their zeros; ratios are collected away from them.
  double cutoff = 1e-3 * rhs_max;
  std::vector<double> ratios;
  ratios.reserve(static_cast<size_t>(samples));
  for (int i = 0; i < samples; ++i) {
    if (std::abs(rhs[static_cast<size_t>(i)]) < cutoff) continue;
    ratios.push_back(lhs[static_cast<size_t>(i)] / rhs[static_cast<size_t>(i)]);
  }
  BridgeReport report;
  report.samples_used = static_cast<int>(ratios.size());
  if (ratios.empty()) return report;
  double mean = 0.0;
  for (double r : ratios) mean += r;
  mean /= static_cast<double>(ratios.size());
  double var = 0.0;
  for (double r : ratios) var += (r - mean) * (r - mean);
  var /= static_cast<double>(ratios.size());
  report.mean_ratio = mean;
  report.rel_spread = std::sqrt(var) / std::abs(mean);
  return report;
}

double infinite_orthogonality(int l, int lp, int m, const QuadratureSpec& spec) {
  if (m < 0 || l - m < 0 || lp - m < 0)
    throw std::domain_error("infinite_orthogonality: degrees l-m and l'-m must be >= 0");
  auto ra = to_double_coeffs(romanovski(RomanovskiParams(Rational(l) + Rational(1, 2), Rational(0)),
                                        l - m)
                                 .poly);
  auto rb = to_double_coeffs(romanovski(RomanovskiParams(Rational(lp) + Rational(1, 2), Rational(0)),
                                        lp - m)
                                 .poly);
  double expo = -0.5 * (l + lp + 3);
  auto integrand = [&](double x) {
    return std::pow(1.0 + x * x, expo) * horner(ra, x) * horner(rb, x);
  };
  return integrate_line(integrand, spec).value;
}

double coulomb_energy(int n_r, double l) {
  if (n_r < 0) throw std::domain_error("coulomb_energy: n_r must be >= 0");
  if (!(l > -1)) throw std::domain_error("coulomb_energy: l must exceed -1");
  double denom = n_r + l + 1;
  return -1.0 / (2.0 * denom * denom);
}

}  // namespace romscarf
