#pragma once

#include "romscarf/polynomial.hpp"

namespace romscarf {

/// Exact element of the differentiation-closed family
///   poly(x) * (1+x^2)^power * exp(arc * arctan x).
/// Differentiation drops `power` by one and maps `poly` to
/// poly'*(1+x^2) + (2*power*x + arc)*poly, keeping everything rational.
struct QArctanForm {
  Poly poly;
  Rational power;
  Rational arc;

  QArctanForm deriv() const;
  QArctanForm nth_deriv(int n) const;

  double value(double x) const;
  bool is_zero() const { return poly.is_zero(); }

  friend bool operator==(const QArctanForm& a, const QArctanForm& b) {
    return a.poly == b.poly && a.power == b.power && a.arc == b.arc;
  }
};

}  // namespace romscarf
