#include "romscarf/romanovski.hpp"

#include <cmath>
#include <stdexcept>

#include "romscarf/quadrature.hpp"

namespace romscarf {

RomanovskiPoly romanovski(const RomanovskiParams& params, int n) {
  if (n < 0) throw std::domain_error("romanovski: n must be >= 0");
  QArctanForm start{Poly::one(), Rational(n) - params.p, params.q};
  QArctanForm result = start.nth_deriv(n);
  if (result.power != -params.p)
    throw std::logic_error("romanovski: differentiation did not land on the weight power");
  return RomanovskiPoly{params, n, result.poly, result.poly.degree() < n};
}

double weight(const RomanovskiParams& params, double x) {
  return std::pow(1.0 + x * x, -params.p.to_double()) *
         std::exp(params.q.to_double() * std::atan(x));
}

bool orthogonal_pair(const RomanovskiParams& params, int m, int mp) {
  if (m < 0 || mp < 0) throw std::domain_error("orthogonal_pair: degrees must be >= 0");
  return Rational(m + mp) < Rational(2) * params.p - Rational(1);
}

Poly rom_ode_residual(const RomanovskiParams& params, int n, const Poly& r) {
  Poly sigma{Rational(1), Rational(0), Rational(1)};
  Poly tau{params.q, Rational(2) * (Rational(1) - params.p)};
  Rational lam = Rational(n) * Rational(n - 1) + Rational(2 * n) * (Rational(1) - params.p);
  return sigma * r.derivative().derivative() + tau * r.derivative() - r.scaled(lam);
}

double norm_closed_q0(const Rational& a, int n) {
  if (n < 1 || n > 3) throw std::domain_error("norm_closed_q0: closed forms cover n in {1,2,3}");
  if (!(a > Rational(n)))
    throw std::domain_error("norm_closed_q0: integral diverges unless a > " + std::to_string(n));
  double ad = a.to_double();
  double sqrt_pi = std::sqrt(M_PI);
  switch (n) {
    case 1: {
      double num = (2 * ad - 1) * (2 * ad - 1) * sqrt_pi * gamma_pos(ad - 1);
      return num / (2.0 * gamma_pos(ad + 0.5));
    }
    case 2: {
      double num = 2.0 * sqrt_pi * (ad - 1) * gamma_pos(ad - 2) * (3 - 2 * ad) * (3 - 2 * ad);
      return num / gamma_pos(ad - 0.5);
    }
    default: {
      double poly = 4 * ad * ad - 16 * ad + 15;
      double num = 3.0 * sqrt_pi * (ad - 2) * gamma_pos(ad - 3) * poly * poly;
      return num / gamma_pos(ad - 0.5);
    }
  }
}

std::vector<double> romanovski_real(double p, double q, int n) {
  if (n < 0) throw std::domain_error("romanovski_real: n must be >= 0");
  // Same product rule as the exact path: P <- P'(1+x^2) + (2sx + q)P, s = n-p down.
  std::vector<double> poly{1.0};
  for (int step = 0; step < n; ++step) {
    double s = static_cast<double>(n - step) - p;
    std::vector<double> next(poly.size() + 1, 0.0);
    for (size_t k = 1; k < poly.size(); ++k) {
      double dk = static_cast<double>(k) * poly[k];
      next[k - 1] += dk;
      next[k + 1] += dk;
    }
    for (size_t k = 0; k < poly.size(); ++k) {
      next[k + 1] += 2.0 * s * poly[k];
      next[k] += q * poly[k];
    }
    poly = std::move(next);
  }
  while (poly.size() > 1 && poly.back() == 0.0) poly.pop_back();
  return poly;
}

}  // namespace romscarf
