#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "romscarf/gauss_rational.hpp"
#include "romscarf/polynomial.hpp"
#include "romscarf/rational.hpp"

namespace romscarf {

/// Coefficients of sigma(x) = a x^2 + b x + c and tau(x) = d x + e in the
/// second-order equation sigma y'' + tau y' - lambda_n y = 0.
struct HypergeqParams {
  Rational a, b, c, d, e;

  Poly sigma() const { return Poly{c, b, a}; }
  Poly tau() const { return Poly{e, d}; }
  Rational discriminant() const { return b * b - Rational(4) * a * c; }

  /// Throws unless sigma is not identically zero.
  void validate() const;
};

/// lambda_n = n(n-1)a + nd, exactly.
Rational lambda_n(const HypergeqParams& hp, int n);

enum class WeightKind { TwoLinearFactors, RepeatedFactor, IrreducibleQuadratic, ExponentialLimit };

/// Closed-form solution of the Pearson equation (sigma w)' = tau w, resolved
/// by the discriminant of sigma. Holds enough data to evaluate w and its
/// logarithmic derivative anywhere both are defined.
struct ClosedWeight {
  WeightKind kind = WeightKind::ExponentialLimit;
  // TwoLinearFactors:     |x-r1|^s1 * |x-r2|^s2
  // RepeatedFactor:       |x-r1|^s1 * exp(k1 / (x - r1))
  // IrreducibleQuadratic: ((x-r1)^2 + rho^2)^s1 * exp(k1 * atan((x-r1)/rho))
  // ExponentialLimit:     |x-r1|^s1 * exp(k1 x + k2 x^2)   (s1 = 0 when sigma is constant)
  double r1 = 0, r2 = 0, s1 = 0, s2 = 0, rho = 0, k1 = 0, k2 = 0;
  bool has_root = false;  // ExponentialLimit only: whether the |x-r1|^s1 factor is present

  double value(double x) const;
  double log_value(double x) const;
  /// w'(x)/w(x) reconstructed from the stored closed form.
  double log_deriv(double x) const;
};

ClosedWeight pearson_weight(const HypergeqParams& hp);

struct RodriguesResult {
  Poly poly;
  int requested_degree = 0;
  bool degree_deficient = false;
  int degree() const { return poly.degree(); }
};

/// P_n = (1/w) d^n/dx^n (sigma^n w), carried out exactly by the product rule
/// on the closed family poly * sigma^s * w. Refuses Bessel-class parameters.
RodriguesResult rodrigues_poly(const HypergeqParams& hp, int n);

/// Same construction without the Bessel guard: formal polynomial algebra for
/// any admissible parameter set, no orthogonality implied.
RodriguesResult rodrigues_formal(const HypergeqParams& hp, int n);

/// Product prod_{k=1..n} (d + (n+k-2)a) connecting the monic polynomial to
/// the Rodrigues-normalized one; zero signals degree collapse.
Rational leading_product(const HypergeqParams& hp, int n);

/// Monic degree-n solution via the terminating Gauss-sum coefficients.
/// Intermediates live in Q(i) or Q(sqrt(disc)); the result must come out
/// rational and this is asserted exactly. Throws on degenerate parameters
/// (an eigenvalue collision, named after the offending Gauss denominator).
Poly monic_master(const HypergeqParams& hp, int n);

/// Gauss-sum path over Q(i) with a complex-allowed tau constant term.
/// Requires |discriminant| to be a perfect rational square.
GaussPoly monic_master_gauss(const Rational& a, const Rational& b, const Rational& c,
                             const Rational& d, const GaussRat& e, int n);

enum class FamilyTag { Jacobi, Laguerre, Hermite, Romanovski, Bessel, Other };

struct AffineShift {
  Rational alpha{1}, beta{0}, scale{1};  // x = alpha*u + beta; equation scaled by `scale`
  bool is_identity() const { return alpha == Rational(1) && beta == Rational(0); }
};

struct CanonicalFamily {
  FamilyTag tag = FamilyTag::Other;
  std::vector<std::pair<std::string, Rational>> params;
  std::optional<AffineShift> shift;  // present when a rational reduction exists
  std::string note;                  // for Other: why no exact reduction was found

  std::optional<Rational> param(const std::string& name) const;
};

std::string family_name(FamilyTag tag);

/// Detects canonical parameter tuples and rational affine reductions
/// x -> alpha*u + beta onto them; everything else is tagged Other.
CanonicalFamily classify(const HypergeqParams& hp);

/// Classical Jacobi polynomial P_n^{nu,mu}; exact coefficients.
Poly jacobi_classical(const Rational& nu, const Rational& mu, int n);

}  // namespace romscarf
