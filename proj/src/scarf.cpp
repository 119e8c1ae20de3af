#include "romscarf/scarf.hpp"

#include <cmath>
#include <stdexcept>

namespace romscarf {

namespace {

// Unit-scale reduction: v^(a,b,alpha)(z) = alpha^2 v^(a/alpha, b/alpha, 1)(alpha z),
// so bound data at general alpha comes from the reduced pair below.
struct Reduced {
  Rational a, b;  // a/alpha, b/alpha
};

Reduced reduce(const ScarfParams& p) { return Reduced{p.a / p.alpha, p.b / p.alpha}; }

int bound_state_count(const Rational& a_reduced) {
  // number of integers n with n < a_reduced
  BigInt fl = a_reduced.floor();
  long long count = fl.convert_to<long long>();
  if (a_reduced.is_integer()) return static_cast<int>(count);
  return static_cast<int>(count) + 1;
}

}  // namespace

double potential_ii(const ScarfParams& params, double z) {
  double a = params.a.to_double(), b = params.b.to_double(), al = params.alpha.to_double();
  double sech = 1.0 / std::cosh(al * z);
  double tanh = std::tanh(al * z);
  return a * a + (b * b - a * a - a * al) * sech * sech + b * (2 * a + al) * sech * tanh;
}

double potential_i(const ScarfParams& params, double z) {
  double a = params.a.to_double(), b = params.b.to_double(), al = params.alpha.to_double();
  if (!(std::abs(al * z) < M_PI / 2))
    throw std::domain_error("potential_i: |alpha z| must be < pi/2");
  double sec = 1.0 / std::cos(al * z);
  double tan = std::tan(al * z);
  return -a * a + (a * a + b * b - a * al) * sec * sec - b * (2 * a + al) * tan * sec;
}

std::vector<EnergyLevel> spectrum_ii(const ScarfParams& params) {
  Reduced r = reduce(params);
  int count = bound_state_count(r.a);
  std::vector<EnergyLevel> levels;
  levels.reserve(static_cast<size_t>(count));
  for (int n = 0; n < count; ++n) {
    Rational gap = params.a - Rational(n) * params.alpha;
    Rational eps = -gap * gap;
    levels.push_back(EnergyLevel{n, eps, eps + params.a * params.a});
  }
  return levels;
}

std::vector<EnergyLevel> spectrum_i(const ScarfParams& params, int n_max) {
  if (n_max < 0) throw std::domain_error("spectrum_i: n_max must be >= 0");
  std::vector<EnergyLevel> levels;
  levels.reserve(static_cast<size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    Rational s = params.a + Rational(n) * params.alpha;
    Rational eps = s * s;
    levels.push_back(EnergyLevel{n, eps, eps - params.a * params.a});
  }
  return levels;
}

double WaveFunction::value(double z) const {
  return value_x(std::sinh(params.alpha.to_double() * z));
}

WaveFunction wavefunction_ii(const ScarfParams& params, int n) {
  if (n < 0) throw std::domain_error("wavefunction_ii: n must be >= 0");
  Reduced r = reduce(params);
  if (!(Rational(n) < r.a))
    throw std::domain_error("wavefunction_ii: n = " + std::to_string(n) +
                            " is not a bound state (requires n < a/alpha)");
  auto rp = RomanovskiParams::from_scarf(r.a, r.b);
  RomanovskiPoly rn = romanovski(rp, n);
  QArctanForm form{rn.poly, -r.a / Rational(2), -r.b};

  Rational gap = params.a - Rational(n) * params.alpha;
  Rational eps = -gap * gap;
  EnergyLevel level{n, eps, eps + params.a * params.a};

  WaveFunction wf{params, level, form, 1.0};
  // || psi ||^2 = (1/alpha) * integral of w^(p,q) R_n^2 over the line
  auto integrand = [&](double x) {
    double v = form.value(x);
    return v * v / std::sqrt(1.0 + x * x);
  };
  double norm2 = integrate_line(integrand, QuadratureSpec::defaults()).value /
                 params.alpha.to_double();
  double sign = rn.poly.leading().sign() < 0 ? -1.0 : 1.0;
  wf.norm = sign / std::sqrt(norm2);
  return wf;
}

double TrigWaveFunction::value(double z) const {
  double al = params.alpha.to_double();
  if (!(std::abs(al * z) < M_PI / 2)) throw std::domain_error("wavefunction_i: out of domain");
  double x = std::sin(al * z);
  double g = gamma.to_double(), d = delta.to_double();
  return norm * std::pow(1.0 - x, 0.5 * g) * std::pow(1.0 + x, 0.5 * d) *
         horner(to_double_coeffs(jacobi), x);
}

TrigWaveFunction wavefunction_i(const ScarfParams& params, int n) {
  if (n < 0) throw std::domain_error("wavefunction_i: n must be >= 0");
  Rational gamma = (params.a - params.b) / params.alpha;
  Rational delta = (params.a + params.b) / params.alpha;
  if (!(gamma > Rational(0)) || !(delta > Rational(0)))
    throw std::domain_error("wavefunction_i: gamma and delta must be > 0 for a normalizable state");
  Poly jac = jacobi_classical(gamma - Rational(1, 2), delta - Rational(1, 2), n);

  Rational s = params.a + Rational(n) * params.alpha;
  EnergyLevel level{n, s * s, s * s - params.a * params.a};
  TrigWaveFunction wf{params, level, gamma, delta, jac, 1.0};

  double al = params.alpha.to_double();
  double half = M_PI / (2 * al);
  auto integrand = [&](double z) {
    double v = wf.value(z);
    return v * v;
  };
  double norm2 = integrate_interval(integrand, -half * (1 - 1e-12), half * (1 - 1e-12),
                                    QuadratureSpec::defaults())
                     .value;
  wf.norm = 1.0 / std::sqrt(norm2);
  return wf;
}

std::vector<double> susy_groundstate(const ScarfParams& params, std::span<const double> z) {
  double a = params.a.to_double(), b = params.b.to_double(), al = params.alpha.to_double();
  std::vector<double> out;
  out.reserve(z.size());
  for (double zi : z) {
    // int U dz = (a/alpha) log cosh(alpha z) + (2b/alpha) atan(tanh(alpha z / 2))
    double integral = (a / al) * std::log(std::cosh(al * zi)) +
                      (2 * b / al) * std::atan(std::tanh(al * zi / 2));
    out.push_back(std::exp(-integral));
  }
  return out;
}

Poly scarf_ode_residual(const ScarfParams& params, int n, const Rational& epsilon_unit_scale) {
  if (n < 0) throw std::domain_error("scarf_ode_residual: n must be >= 0");
  Reduced r = reduce(params);
  if (!(Rational(n) < r.a))
    throw std::domain_error("scarf_ode_residual: n is not a bound state");
  auto rp = RomanovskiParams::from_scarf(r.a, r.b);
  Poly rn = romanovski(rp, n).poly;
  QArctanForm g{rn, -r.a / Rational(2), -r.b};
  QArctanForm g1 = g.deriv();
  QArctanForm g2 = g1.deriv();

  // Multiply the equation by (1+x^2); every term then sits at the same
  // (1+x^2)^(-a/2) e^(-b atan x) factor and the polynomial parts must cancel.
  Poly sigma{Rational(1), Rational(0), Rational(1)};
  Poly x_poly{Rational(0), Rational(1)};
  Poly coupling{r.a * (r.a + Rational(1)) - r.b * r.b, -r.b * (Rational(2) * r.a + Rational(1))};
  return g2.poly + g1.poly * x_poly + rn * coupling + rn * sigma.scaled(epsilon_unit_scale);
}

Poly schrodinger_residual_ii(const ScarfParams& params, int n) {
  Reduced r = reduce(params);
  Rational gap = r.a - Rational(n);
  return scarf_ode_residual(params, n, -gap * gap);
}

}  // namespace romscarf
