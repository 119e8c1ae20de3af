#include "romscarf/arctan_form.hpp"

#include <cmath>
#include <stdexcept>

namespace romscarf {

std::vector<double> to_double_coeffs(const Poly& p) {
  std::vector<double> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(c.to_double());
  return out;
}

double horner(const std::vector<double>& coeffs, double x) {
  double acc = 0.0;
  for (size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
  return acc;
}

QArctanForm QArctanForm::deriv() const {
  Poly sigma{Rational(1), Rational(0), Rational(1)};
  Poly shift{arc, Rational(2) * power};
  return QArctanForm{poly.derivative() * sigma + poly * shift, power - Rational(1), arc};
}

QArctanForm QArctanForm::nth_deriv(int n) const {
  if (n < 0) throw std::domain_error("QArctanForm::nth_deriv: n must be >= 0");
  QArctanForm f = *this;
  for (int i = 0; i < n; ++i) f = f.deriv();
  return f;
}

double QArctanForm::value(double x) const {
  double p = horner(to_double_coeffs(poly), x);
  return p * std::pow(1.0 + x * x, power.to_double()) * std::exp(arc.to_double() * std::atan(x));
}

}  // namespace romscarf
