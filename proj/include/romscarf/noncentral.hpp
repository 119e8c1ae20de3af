#pragma once

#include <array>
#include <complex>
#include <vector>

#include "romscarf/quadrature.hpp"

namespace romscarf {

/// How the pair (a, b) behind the polar-angle equation is pinned down.
enum class ParamStrategy {
  FromLC,     // closed form in (l, c)
  FromMNC,    // a = m + n, b = -c/(2(m+n)+1), l derived
  IntegerL,   // a = b = l(l+1) for integer l; the default
};

/// Data of the polar-angle problem for the Coulomb-plus-cot(theta) potential:
/// separation label l, azimuthal label m > 0, strength c, and the derived
/// potential parameters (a, b) with polynomial degree n satisfying
///   l(l+1) = a(a+1) - b^2,   c = -b(2a+1),   m^2 = (a-n)^2.
struct AngularProblem {
  ParamStrategy strategy = ParamStrategy::IntegerL;
  double l = 0, m = 0, c = 0;
  double a = 0, b = 0;
  int n = 0;

  /// Residuals of the three constraints above, in the listed order.
  std::array<double, 3> constraint_residuals() const;
};

AngularProblem solve_params_from_lc(double l, double c, int n);
AngularProblem solve_params_from_mnc(double m, int n, double c);
AngularProblem solve_params_integer_l(int l, int m);

/// z = asinh(-cot theta) for theta in (0, pi), and its inverse.
double theta_to_z(double theta);
double z_to_theta(double z);

/// The variable change theta = f(z) = 2 atan(e^z).
double f_of_z(double z);

/// Polar-angle solution Theta(theta) = psi_n(asinh(-cot theta)), normalized so
/// that the integral of Theta^2 sin(theta) over (0, pi) is one. The full
/// Z_l^m adds the unimodular factor e^{i m phi}.
struct AngularFunction {
  AngularProblem problem;
  std::vector<double> coeffs;  // R_n^{(a+1/2, -2b)} in doubles
  double norm = 1.0;

  double theta_value(double theta) const;
  double abs_Z(double theta, double phi) const;
  std::complex<double> Z(double theta, double phi) const;
};

AngularFunction angular_function(const AngularProblem& problem);

/// Discrete-series labels: mprime = a + 1/2, j = mprime - n.
struct SU11Labels {
  double j = 0, mprime = 0;
};

SU11Labels su11_labels(const AngularProblem& problem);

/// Bound-state energy written through the labels: -(j - 1/2)^2.
double su11_energy(const SU11Labels& labels);

/// Associated Legendre function without the Condon-Shortley phase,
/// by the standard upward recurrences. Independent of the polynomial path.
double assoc_legendre(int l, int m, double x);

struct BridgeReport {
  double mean_ratio = 0.0;
  double rel_spread = 0.0;  // stddev(ratio) / |mean(ratio)|
  int samples_used = 0;
};

/// Pointwise ratio of P_l^m(cos theta) against
/// (1 + cot^2 theta)^{-l/2} R_{l-m}^{(l+1/2, 0)}(-cot theta)
/// over theta in [margin, pi - margin]; constant when the identity holds.
BridgeReport legendre_bridge(int l, int m, double theta_margin = 0.1, int samples = 200);

/// Cross-parameter orthogonality integral
///   int sqrt(w^{(l+1/2,0)}) R_{l-m} sqrt(w^{(l'+1/2,0)}) R_{l'-m} dx/(1+x^2);
/// zero for l != l', a positive norm on the diagonal.
double infinite_orthogonality(int l, int lp, int m, const QuadratureSpec& spec);

/// -1/(2 (n_r + l + 1)^2) in natural units; l may be non-integer.
double coulomb_energy(int n_r, double l);

}  // namespace romscarf
