#pragma once

#include <span>
#include <vector>

#include "romscarf/arctan_form.hpp"
#include "romscarf/quadrature.hpp"
#include "romscarf/rational.hpp"
#include "romscarf/romanovski.hpp"

namespace romscarf {

/// Strength a > 0, asymmetry b, scale alpha > 0 of the Scarf potentials.
struct ScarfParams {
  Rational a, b, alpha{1};

  ScarfParams(Rational a_, Rational b_, Rational alpha_ = Rational(1))
      : a(std::move(a_)), b(std::move(b_)), alpha(std::move(alpha_)) {
    if (!(a > Rational(0))) throw std::domain_error("ScarfParams: a must be > 0");
    if (!(alpha > Rational(0))) throw std::domain_error("ScarfParams: alpha must be > 0");
  }
};

struct EnergyLevel {
  int n = 0;
  Rational epsilon;  // hyperbolic: -(a - n*alpha)^2; trigonometric: (a + n*alpha)^2
  Rational e;        // hyperbolic: epsilon + a^2;    trigonometric: epsilon - a^2
};

/// Hyperbolic (Scarf II) potential value.
double potential_ii(const ScarfParams& params, double z);

/// Trigonometric (Scarf I) potential value; |alpha z| < pi/2.
double potential_i(const ScarfParams& params, double z);

/// All bound levels of the hyperbolic potential: n * alpha < a.
std::vector<EnergyLevel> spectrum_ii(const ScarfParams& params);

/// Infinite trigonometric ladder truncated at n_max (inclusive).
std::vector<EnergyLevel> spectrum_i(const ScarfParams& params, int n_max);

/// Bound state of the hyperbolic potential, held exactly in the variable
/// x = sinh(alpha z) as R_n(x) (1+x^2)^{-a/(2 alpha)} exp(-(b/alpha) atan x),
/// with a numeric normalization over z.
struct WaveFunction {
  ScarfParams params;
  EnergyLevel level;
  QArctanForm form;    // in x = sinh(alpha z), parameters reduced to unit scale
  double norm = 1.0;

  double value_x(double x) const { return norm * form.value(x); }
  double value(double z) const;
};

WaveFunction wavefunction_ii(const ScarfParams& params, int n);

/// Bound state of the trigonometric potential in x = sin(alpha z):
/// sqrt((1-x)^gamma (1+x)^delta) P_n^{gamma-1/2, delta-1/2}(x).
struct TrigWaveFunction {
  ScarfParams params;
  EnergyLevel level;
  Rational gamma, delta;
  Poly jacobi;
  double norm = 1.0;

  double value(double z) const;
};

TrigWaveFunction wavefunction_i(const ScarfParams& params, int n);

/// exp(-int U) for the superpotential U = a tanh(alpha z) + b sech(alpha z),
/// sampled on the given grid (unnormalized).
std::vector<double> susy_groundstate(const ScarfParams& params, std::span<const double> z);

/// Exact residual polynomial of the transformed bound-state equation
/// (1+x^2) g'' + x g' + ((a(a+1)-b^2 - b(2a+1)x)/(1+x^2) + eps) g = 0
/// applied to level n with an explicit eigenvalue; identically zero only at
/// the true eps. Parameters with alpha != 1 are reduced to unit scale first.
Poly scarf_ode_residual(const ScarfParams& params, int n, const Rational& epsilon_unit_scale);

/// Residual at the analytic eigenvalue; expected to be the zero polynomial.
Poly schrodinger_residual_ii(const ScarfParams& params, int n);

}  // namespace romscarf
