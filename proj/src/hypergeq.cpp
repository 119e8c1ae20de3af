#include "romscarf/hypergeq.hpp"

#include <cmath>
#include <stdexcept>

namespace romscarf {

void HypergeqParams::validate() const {
  if (a.is_zero() && b.is_zero() && c.is_zero())
    throw std::domain_error("hypergeq: sigma is identically zero");
}

Rational lambda_n(const HypergeqParams& hp, int n) {
  if (n < 0) throw std::domain_error("lambda_n: n must be >= 0");
  Rational nn(n);
  return nn * (nn - Rational(1)) * hp.a + nn * hp.d;
}

GaussRat pow(const GaussRat& x, int k) {
  if (k < 0) return GaussRat(1) / pow(x, -k);
  GaussRat result(1), base = x;
  while (k > 0) {
    if (k & 1) result *= base;
    base *= base;
    k >>= 1;
  }
  return result;
}

QuadExt pow(const QuadExt& x, int k) {
  if (k < 0) return QuadExt(1) / pow(x, -k);
  QuadExt result = QuadExt::scalar(Rational(1));
  QuadExt base = x;
  while (k > 0) {
    if (k & 1) result = result * base;
    base = base * base;
    k >>= 1;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Pearson weight

double ClosedWeight::log_value(double x) const {
  switch (kind) {
    case WeightKind::TwoLinearFactors:
      return s1 * std::log(std::abs(x - r1)) + s2 * std::log(std::abs(x - r2));
    case WeightKind::RepeatedFactor:
      return s1 * std::log(std::abs(x - r1)) + k1 / (x - r1);
    case WeightKind::IrreducibleQuadratic: {
      double u = x - r1;
      return s1 * std::log(u * u + rho * rho) + k1 * std::atan(u / rho);
    }
    case WeightKind::ExponentialLimit: {
      double lg = k1 * x + k2 * x * x;
      if (has_root) lg += s1 * std::log(std::abs(x - r1));
      return lg;
    }
  }
  return 0.0;
}

double ClosedWeight::value(double x) const { return std::exp(log_value(x)); }

double ClosedWeight::log_deriv(double x) const {
  switch (kind) {
    case WeightKind::TwoLinearFactors:
      return s1 / (x - r1) + s2 / (x - r2);
    case WeightKind::RepeatedFactor: {
      double u = x - r1;
      return s1 / u - k1 / (u * u);
    }
    case WeightKind::IrreducibleQuadratic: {
      double u = x - r1;
      double q = u * u + rho * rho;
      return (2.0 * s1 * u + k1 * rho) / q;
    }
    case WeightKind::ExponentialLimit: {
      double lg = k1 + 2.0 * k2 * x;
      if (has_root) lg += s1 / (x - r1);
      return lg;
    }
  }
  return 0.0;
}

ClosedWeight pearson_weight(const HypergeqParams& hp) {
  hp.validate();
  double a = hp.a.to_double(), b = hp.b.to_double(), c = hp.c.to_double();
  double d = hp.d.to_double(), e = hp.e.to_double();
  ClosedWeight w;
  if (!hp.a.is_zero()) {
    Rational disc = hp.discriminant();
    if (disc > Rational(0)) {
      double sq = std::sqrt(disc.to_double());
      double ra = (-b + sq) / (2.0 * a), rb = (-b - sq) / (2.0 * a);
      w.kind = WeightKind::TwoLinearFactors;
      w.r1 = std::min(ra, rb);
      w.r2 = std::max(ra, rb);
      w.s1 = ((d - 2 * a) * w.r1 + (e - b)) / (a * (w.r1 - w.r2));
      w.s2 = ((d - 2 * a) * w.r2 + (e - b)) / (a * (w.r2 - w.r1));
    } else if (disc.is_zero()) {
      w.kind = WeightKind::RepeatedFactor;
      w.r1 = -b / (2.0 * a);
      w.s1 = (d - 2 * a) / a;
      w.k1 = -((d - 2 * a) * w.r1 + (e - b)) / a;
    } else {
      w.kind = WeightKind::IrreducibleQuadratic;
      w.r1 = -b / (2.0 * a);
      w.rho = std::sqrt((-disc.to_double())) / (2.0 * std::abs(a));
      w.s1 = (d - 2 * a) / (2.0 * a);
      double residue = (d - 2 * a) * w.r1 + (e - b);
      w.k1 = residue / (a * w.rho);
    }
  } else if (!hp.b.is_zero()) {
    w.kind = WeightKind::ExponentialLimit;
    w.has_root = true;
    w.r1 = -c / b;
    w.s1 = ((e - b) * b - d * c) / (b * b);
    w.k1 = d / b;
  } else {
    w.kind = WeightKind::ExponentialLimit;
    w.k1 = e / c;
    w.k2 = d / (2.0 * c);
  }
  return w;
}

// ---------------------------------------------------------------------------
// Rodrigues construction

RodriguesResult rodrigues_formal(const HypergeqParams& hp, int n) {
  hp.validate();
  if (n < 0) throw std::domain_error("rodrigues: n must be >= 0");
  Poly sig = hp.sigma();
  Poly dsig = sig.derivative();
  Poly tau = hp.tau();
  // d/dx [P sigma^s w] = [P' sigma + ((s-1) sigma' + tau) P] sigma^{s-1} w
  // with w'/w = (tau - sigma')/sigma; start from sigma^n w and peel n times.
  Poly p = Poly::one();
  for (int step = 0; step < n; ++step) {
    Rational s(n - step);
    p = p.derivative() * sig + p * (dsig.scaled(s - Rational(1)) + tau);
  }
  return RodriguesResult{p, n, p.degree() < n};
}

RodriguesResult rodrigues_poly(const HypergeqParams& hp, int n) {
  if (classify(hp).tag == FamilyTag::Bessel)
    throw std::domain_error(
        "rodrigues_poly: Bessel-class parameters are not orthogonal within any real interval; "
        "construction refused (use classification only)");
  return rodrigues_formal(hp, n);
}

Rational leading_product(const HypergeqParams& hp, int n) {
  if (n < 0) throw std::domain_error("leading_product: n must be >= 0");
  Rational prod(1);
  for (int k = 1; k <= n; ++k) prod *= hp.d + Rational(n + k - 2) * hp.a;
  return prod;
}

// ---------------------------------------------------------------------------
// Monic master formula

namespace {

// Terminating 2F1(A, B; C; z) with A = -(terms), summed exactly in K.
template <class K>
K gauss_2f1_terminating(const K& A, const K& B, const K& C, const K& z, int terms,
                        const std::string& degen_msg) {
  K sum(1), term(1);
  for (int j = 0; j < terms; ++j) {
    K denom = C + K(j);
    if (denom == K(0)) throw std::domain_error(degen_msg);
    term = term * (A + K(j)) * (B + K(j)) / (denom * K(j + 1)) * z;
    sum = sum + term;
  }
  return sum;
}

template <class K>
std::vector<K> gauss_sum_coeffs(const K& a, const K& b, const K& d, const K& e, K sqrt_disc,
                                int n, const std::string& degen_msg) {
  K two(2);
  K bs = b + sqrt_disc;
  if (bs == K(0)) {
    sqrt_disc = -sqrt_disc;
    bs = b + sqrt_disc;
  }
  K base = bs / (two * a);
  K z = two * sqrt_disc / bs;
  K upper = (two * a * e - b * d) / (two * a * sqrt_disc) + K(1) - d / (two * a) - K(n);
  K lower = two - d / a - K(2 * n);

  std::vector<K> coeffs(static_cast<size_t>(n) + 1);
  K binom(1);
  for (int k = 0; k <= n; ++k) {
    if (k > 0) binom = binom * K(n - k + 1) / K(k);
    K f = gauss_2f1_terminating(K(k - n), upper, lower, z, n - k, degen_msg);
    coeffs[static_cast<size_t>(k)] = binom * pow(base, n - k) * f;
  }
  return coeffs;
}

std::string degenerate_message(const HypergeqParams& hp, int n) {
  Rational cval = Rational(2) - hp.d / hp.a - Rational(2 * n);
  return "monic_master: denominator parameter 2 - d/a - 2n = " + cval.str() +
         " hits a nonpositive integer within the terminating sum (eigenvalue collision)";
}

// Downward coefficient recurrence from the monic leading term; covers the
// repeated-root discriminant where the Gauss-sum parameterization breaks down.
Poly monic_by_recurrence(const HypergeqParams& hp, int n) {
  Rational lam_n = lambda_n(hp, n);
  std::vector<Rational> g(static_cast<size_t>(n) + 1);
  g[static_cast<size_t>(n)] = Rational(1);
  for (int j = n - 1; j >= 0; --j) {
    Rational denom = lambda_n(hp, j) - lam_n;
    if (denom.is_zero())
      throw std::domain_error("monic_master: eigenvalue collision lambda_" + std::to_string(j) +
                              " = lambda_" + std::to_string(n));
    Rational acc = Rational(j + 1) * (hp.b * Rational(j) + hp.e) * g[static_cast<size_t>(j) + 1];
    if (j + 2 <= n)
      acc += hp.c * Rational(static_cast<long long>(j + 2) * (j + 1)) * g[static_cast<size_t>(j) + 2];
    g[static_cast<size_t>(j)] = -acc / denom;
  }
  return Poly(std::move(g));
}

// a = 0, b != 0: the 2F0 limit. Monic solution as a terminating double-factor
// product over powers of (x + c/b).
Poly laguerre_limit_coeffs(const HypergeqParams& hp, int n) {
  if (hp.d.is_zero())
    throw std::domain_error("monic_master: degenerate tau (d = 0), all eigenvalues coincide");
  Rational shift = hp.c / hp.b;
  Rational a2 = Rational(1 - n) - hp.e / hp.b + hp.c * hp.d / (hp.b * hp.b);
  Rational ratio = hp.b / hp.d;
  Poly base{shift, Rational(1)};
  std::vector<Poly> base_pow(static_cast<size_t>(n) + 1);
  base_pow[0] = Poly::one();
  for (int k = 1; k <= n; ++k) base_pow[static_cast<size_t>(k)] = base_pow[static_cast<size_t>(k) - 1] * base;

  Poly out;
  Rational term(1);
  for (int j = 0; j <= n; ++j) {
    if (j > 0) term *= Rational(j - 1 - n) * (a2 + Rational(j - 1)) / Rational(j) * ratio;
    out = out + base_pow[static_cast<size_t>(n - j)].scaled(term);
  }
  return out;
}

// a = b = 0: constant sigma. Monic solution in powers of (x + e/d).
Poly hermite_limit_coeffs(const HypergeqParams& hp, int n) {
  if (hp.d.is_zero())
    throw std::domain_error("monic_master: degenerate tau (d = 0), all eigenvalues coincide");
  Rational shift = hp.e / hp.d;
  Rational ratio = hp.c / hp.d;
  Poly base{shift, Rational(1)};
  std::vector<Poly> base_pow(static_cast<size_t>(n) + 1);
  base_pow[0] = Poly::one();
  for (int k = 1; k <= n; ++k) base_pow[static_cast<size_t>(k)] = base_pow[static_cast<size_t>(k) - 1] * base;

  Poly out;
  Rational term(1);
  for (int j = 0; 2 * j <= n; ++j) {
    if (j > 0) term *= Rational(static_cast<long long>(n - 2 * j + 2) * (n - 2 * j + 1), 2 * j) * ratio;
    out = out + base_pow[static_cast<size_t>(n - 2 * j)].scaled(term);
  }
  return out;
}

Poly real_parts_exact(const std::vector<GaussRat>& coeffs) {
  std::vector<Rational> re(coeffs.size());
  for (size_t k = 0; k < coeffs.size(); ++k) {
    if (!coeffs[k].im.is_zero())
      throw std::logic_error("monic_master: imaginary part of coefficient x^" + std::to_string(k) +
                             " did not cancel: " + coeffs[k].im.str());
    re[k] = coeffs[k].re;
  }
  return Poly(std::move(re));
}

Poly rational_parts_exact(const std::vector<QuadExt>& coeffs) {
  std::vector<Rational> re(coeffs.size());
  for (size_t k = 0; k < coeffs.size(); ++k) {
    if (!coeffs[k].s.is_zero())
      throw std::logic_error("monic_master: irrational part of coefficient x^" + std::to_string(k) +
                             " did not cancel: " + coeffs[k].s.str());
    re[k] = coeffs[k].r;
  }
  return Poly(std::move(re));
}

}  // namespace

Poly monic_master(const HypergeqParams& hp, int n) {
  hp.validate();
  if (n < 0) throw std::domain_error("monic_master: n must be >= 0");
  if (n == 0) return Poly::one();

  if (!hp.a.is_zero()) {
    Rational disc = hp.discriminant();
    if (disc.is_zero()) return monic_by_recurrence(hp, n);
    std::string degen = degenerate_message(hp, n);
    if (auto rt = rational_sqrt(disc)) {
      auto coeffs = gauss_sum_coeffs<GaussRat>(GaussRat(hp.a), GaussRat(hp.b), GaussRat(hp.d),
                                               GaussRat(hp.e), GaussRat(*rt), n, degen);
      return real_parts_exact(coeffs);
    }
    if (auto rt = rational_sqrt(-disc)) {
      auto coeffs = gauss_sum_coeffs<GaussRat>(GaussRat(hp.a), GaussRat(hp.b), GaussRat(hp.d),
                                               GaussRat(hp.e), GaussRat(Rational(0), *rt), n, degen);
      return real_parts_exact(coeffs);
    }
    auto sa = QuadExt::scalar(hp.a), sb = QuadExt::scalar(hp.b);
    auto sd = QuadExt::scalar(hp.d), se = QuadExt::scalar(hp.e);
    auto coeffs = gauss_sum_coeffs<QuadExt>(sa, sb, sd, se, QuadExt::root(disc), n, degen);
    return rational_parts_exact(coeffs);
  }
  if (!hp.b.is_zero()) return laguerre_limit_coeffs(hp, n);
  return hermite_limit_coeffs(hp, n);
}

GaussPoly monic_master_gauss(const Rational& a, const Rational& b, const Rational& c,
                             const Rational& d, const GaussRat& e, int n) {
  if (a.is_zero()) throw std::domain_error("monic_master_gauss: requires a != 0");
  if (n < 0) throw std::domain_error("monic_master_gauss: n must be >= 0");
  if (n == 0) return GaussPoly::one();
  Rational disc = b * b - Rational(4) * a * c;
  GaussRat sqrt_disc;
  if (auto rt = rational_sqrt(disc))
    sqrt_disc = GaussRat(*rt);
  else if (auto irt = rational_sqrt(-disc))
    sqrt_disc = GaussRat(Rational(0), *irt);
  else
    throw std::domain_error("monic_master_gauss: |discriminant| is not a perfect square");
  HypergeqParams shim{a, b, c, d, Rational(0)};
  auto coeffs = gauss_sum_coeffs<GaussRat>(GaussRat(a), GaussRat(b), GaussRat(d), e, sqrt_disc, n,
                                           degenerate_message(shim, n));
  return GaussPoly(std::move(coeffs));
}

// ---------------------------------------------------------------------------
// Classification

std::string family_name(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::Jacobi: return "Jacobi";
    case FamilyTag::Laguerre: return "Laguerre";
    case FamilyTag::Hermite: return "Hermite";
    case FamilyTag::Romanovski: return "Romanovski";
    case FamilyTag::Bessel: return "Bessel";
    case FamilyTag::Other: return "Other";
  }
  return "Other";
}

std::optional<Rational> CanonicalFamily::param(const std::string& name) const {
  for (const auto& [key, value] : params)
    if (key == name) return value;
  return std::nullopt;
}

CanonicalFamily classify(const HypergeqParams& hp) {
  hp.validate();
  CanonicalFamily out;
  const Rational &a = hp.a, &b = hp.b, &c = hp.c, &d = hp.d, &e = hp.e;

  if (!a.is_zero()) {
    Rational disc = hp.discriminant();
    Rational beta = -b / (Rational(2) * a);
    Rational e_centered = e - d * b / (Rational(2) * a);
    if (disc.is_zero()) {
      // sigma = a (x - beta)^2; any rational rescale works, take alpha = 1.
      out.tag = FamilyTag::Bessel;
      out.params = {{"alpha", d / a - Rational(2)}, {"beta", e_centered / a}};
      out.shift = AffineShift{Rational(1), beta, Rational(1) / a};
      return out;
    }
    if (disc < Rational(0)) {
      Rational alpha2 = -disc / (Rational(4) * a * a);
      if (auto alpha = rational_sqrt(alpha2)) {
        Rational p = Rational(1) - d / (Rational(2) * a);
        Rational q = e_centered / (a * *alpha);
        out.tag = FamilyTag::Romanovski;
        out.params = {{"p", p}, {"q", q}};
        out.shift = AffineShift{*alpha, beta, Rational(1) / (a * alpha2)};
        return out;
      }
      out.note = "irreducible sigma but the Romanovski rescale sqrt(-disc)/(2a) is irrational";
      return out;
    }
    Rational alpha2 = disc / (Rational(4) * a * a);
    if (auto alpha = rational_sqrt(alpha2)) {
      Rational sum_gd = d / a - Rational(2);           // gamma + delta
      Rational diff_gd = -e_centered / (a * *alpha);   // -gamma + delta
      out.tag = FamilyTag::Jacobi;
      out.params = {{"gamma", (sum_gd - diff_gd) / Rational(2)},
                    {"delta", (sum_gd + diff_gd) / Rational(2)}};
      out.shift = AffineShift{*alpha, beta, -Rational(1) / (a * alpha2)};
      return out;
    }
    out.note = "two real sigma roots but the Jacobi rescale sqrt(disc)/(2a) is irrational";
    return out;
  }

  if (!b.is_zero()) {
    if (d.is_zero()) {
      out.note = "degenerate tau (d = 0): no polynomial eigenvalue ladder";
      return out;
    }
    out.tag = FamilyTag::Laguerre;
    out.params = {{"alpha", (e - d * c / b) / b - Rational(1)}};
    out.shift = AffineShift{-b / d, -c / b, -d / (b * b)};
    return out;
  }

  if (d.is_zero()) {
    out.note = "degenerate tau (d = 0): no polynomial eigenvalue ladder";
    return out;
  }
  Rational alpha2 = -Rational(2) * c / d;
  if (alpha2 > Rational(0)) {
    if (auto alpha = rational_sqrt(alpha2)) {
      out.tag = FamilyTag::Hermite;
      out.shift = AffineShift{*alpha, -e / d, Rational(1) / c};
      return out;
    }
    out.note = "constant sigma but the Hermite rescale sqrt(-2c/d) is irrational";
    return out;
  }
  out.note = "constant sigma with c and d of equal sign: weight grows at infinity";
  return out;
}

Poly jacobi_classical(const Rational& nu, const Rational& mu, int n) {
  HypergeqParams hp{Rational(-1), Rational(0), Rational(1), -nu - mu - Rational(2), -nu + mu};
  Poly raw = rodrigues_formal(hp, n).poly;
  Rational fact(1);
  for (int k = 2; k <= n; ++k) fact *= Rational(k);
  return raw.scaled(pow(Rational(-1, 2), n) / fact);
}

}  // namespace romscarf
