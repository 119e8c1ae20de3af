#pragma once

#include <vector>

#include "romscarf/arctan_form.hpp"
#include "romscarf/hypergeq.hpp"
#include "romscarf/polynomial.hpp"
#include "romscarf/rational.hpp"

namespace romscarf {

/// Parameters (p, q) of the weight (1+x^2)^{-p} exp(q arctan x), p > 0.
struct RomanovskiParams {
  Rational p, q;

  RomanovskiParams(Rational p_, Rational q_) : p(std::move(p_)), q(std::move(q_)) {
    if (!(p > Rational(0))) throw std::domain_error("RomanovskiParams: p must be > 0");
  }

  /// Dictionary p = a + 1/2, q = -2b.
  static RomanovskiParams from_scarf(const Rational& a, const Rational& b) {
    return RomanovskiParams(a + Rational(1, 2), Rational(-2) * b);
  }

  HypergeqParams canonical_tuple() const {
    return HypergeqParams{Rational(1), Rational(0), Rational(1),
                          Rational(2) * (Rational(1) - p), q};
  }
};

struct RomanovskiPoly {
  RomanovskiParams params;
  int n = 0;
  Poly poly;
  bool degree_deficient = false;
};

/// R_n^{(p,q)} by n-fold exact differentiation of (1+x^2)^{n-p} e^{q arctan x}
/// inside the closed arctan family.
RomanovskiPoly romanovski(const RomanovskiParams& params, int n);

/// Weight value at a real point; positive everywhere.
double weight(const RomanovskiParams& params, double x);

/// Finite-orthogonality predicate: m + m' < 2p - 1, compared exactly.
bool orthogonal_pair(const RomanovskiParams& params, int m, int mp);

/// Exact residual of (1+x^2) R'' + (2(1-p)x + q) R' - (n(n-1) + 2n(1-p)) R.
Poly rom_ode_residual(const RomanovskiParams& params, int n, const Poly& r);

/// Closed-form squared norms for q = 0 and n in {1,2,3}; requires a > n.
double norm_closed_q0(const Rational& a, int n);

/// Floating-point twin of the Rodrigues construction for non-rational
/// parameters; returns ascending coefficients.
std::vector<double> romanovski_real(double p, double q, int n);

}  // namespace romscarf
