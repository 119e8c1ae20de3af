#include <random>

#include "doctest.h"
#include "romscarf/arctan_form.hpp"
#include "romscarf/gauss_rational.hpp"
#include "romscarf/polynomial.hpp"
#include "romscarf/rational.hpp"

using namespace romscarf;

namespace {

Rational rand_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-12, 12);
  std::uniform_int_distribution<int> den(1, 9);
  return Rational(num(rng), den(rng));
}

Poly rand_poly(std::mt19937& rng, int max_deg) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  int d = deg(rng);
  std::vector<Rational> c(static_cast<size_t>(d) + 1);
  for (auto& v : c) v = rand_rational(rng);
  return Poly(std::move(c));
}

// Independent derivative: differentiate c x^j (1+x^2)^s e^{q atan x} term by
// term and re-collect everything at power s-1.
QArctanForm term_by_term_deriv(const QArctanForm& f) {
  Poly sigma{Rational(1), Rational(0), Rational(1)};
  Poly out;
  for (int j = 0; j <= f.poly.degree(); ++j) {
    Rational cj = f.poly.coeff(j);
    if (cj.is_zero()) continue;
    if (j >= 1) {
      Poly xjm1 = Poly::monomial(Rational(j) * cj, j - 1);
      out = out + xjm1 * sigma;
    }
    out = out + Poly::monomial(Rational(2) * f.power * cj, j + 1);
    out = out + Poly::monomial(f.arc * cj, j);
  }
  return QArctanForm{out, f.power - Rational(1), f.arc};
}

}  // namespace

TEST_CASE("rational canonical form") {
  Rational r(6, -8);
  CHECK(r.numerator() == BigInt(-3));
  CHECK(r.denominator() == BigInt(4));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(0).denominator() == BigInt(1));
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational parsing") {
  CHECK(Rational::parse("21/2") == Rational(21, 2));
  CHECK(Rational::parse("-21/2") == Rational(-21, 2));
  CHECK(Rational::parse(" 7 ") == Rational(7));
  CHECK(Rational::parse("2.5") == Rational(5, 2));
  CHECK(Rational::parse("-0.25") == Rational(-1, 4));
  CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/"), std::invalid_argument);
}

TEST_CASE("rational arithmetic round trips") {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    Rational x = rand_rational(rng), y = rand_rational(rng);
    CHECK((x + y) - y == x);
    if (!y.is_zero()) CHECK((x / y) * y == x);
    CHECK(x * y == y * x);
  }
  CHECK(pow(Rational(2, 3), 3) == Rational(8, 27));
  CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
}

TEST_CASE("rational sqrt detects perfect squares") {
  CHECK(rational_sqrt(Rational(9, 4)) == Rational(3, 2));
  CHECK(rational_sqrt(Rational(0)) == Rational(0));
  CHECK(!rational_sqrt(Rational(2)).has_value());
  CHECK(!rational_sqrt(Rational(-4)).has_value());
}

TEST_CASE("polynomial ring basics") {
  Poly p{Rational(1), Rational(0), Rational(2)};  // 1 + 2x^2
  CHECK(p.eval(Rational(3)) == Rational(19));
  CHECK(Poly::x() * Poly::x() == Poly{Rational(0), Rational(0), Rational(1)});
  CHECK(p + Poly() == p);
  CHECK((p - p).is_zero());
  CHECK(Poly().degree() == -1);
  CHECK(p.derivative() == Poly{Rational(0), Rational(4)});
}

TEST_CASE("polynomial trailing zeros are trimmed") {
  Poly p({Rational(1), Rational(2), Rational(0), Rational(0)});
  CHECK(p.degree() == 1);
  std::mt19937 rng(11);
  for (int i = 0; i < 50; ++i) {
    Poly a = rand_poly(rng, 5), b = rand_poly(rng, 5);
    Poly diff = (a + b) - b;
    CHECK(diff == a);
  }
}

TEST_CASE("form derivative basic moves") {
  QArctanForm constant{Poly::one(), Rational(0), Rational(0)};
  CHECK(constant.deriv().poly.is_zero());

  QArctanForm sigma{Poly::one(), Rational(1), Rational(0)};
  QArctanForm dsigma = sigma.deriv();
  CHECK(dsigma.poly == Poly{Rational(0), Rational(2)});
  CHECK(dsigma.power == Rational(0));

  QArctanForm exp_atan{Poly::one(), Rational(0), Rational(1)};
  QArctanForm de = exp_atan.deriv();
  CHECK(de.poly == Poly::one());
  CHECK(de.power == Rational(-1));
  CHECK(de.arc == Rational(1));
}

TEST_CASE("nth derivative against the term-by-term oracle") {
  QArctanForm f{Poly::one(), Rational(1), Rational(0)};
  QArctanForm d2 = f.nth_deriv(2);
  QArctanForm oracle = term_by_term_deriv(term_by_term_deriv(f));
  CHECK(d2 == oracle);
  // second derivative of (1+x^2) is the constant 2, carried as (2+2x^2)/(1+x^2)
  CHECK(d2.poly == Poly{Rational(2), Rational(0), Rational(2)});
  CHECK(d2.power == Rational(-1));

  std::mt19937 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    QArctanForm g{rand_poly(rng, 4), rand_rational(rng), rand_rational(rng)};
    QArctanForm byrule = g;
    QArctanForm byterms = g;
    for (int k = 0; k < 3; ++k) {
      byrule = byrule.deriv();
      byterms = term_by_term_deriv(byterms);
      CHECK(byrule == byterms);
    }
  }
}

TEST_CASE("first derivative of the Rodrigues kernel") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    Rational p = rand_rational(rng), q = rand_rational(rng);
    QArctanForm f{Poly::one(), Rational(1) - p, q};
    QArctanForm d = f.nth_deriv(1);
    CHECK(d.poly == Poly{q, Rational(2) * (Rational(1) - p)});
    CHECK(d.power == -p);
  }
}

TEST_CASE("nth derivative composes additively") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    QArctanForm f{rand_poly(rng, 3), rand_rational(rng), rand_rational(rng)};
    std::uniform_int_distribution<int> small(0, 3);
    int n = small(rng), m = small(rng);
    CHECK(f.nth_deriv(n).nth_deriv(m) == f.nth_deriv(n + m));
  }
  QArctanForm f{rand_poly(rng, 3), rand_rational(rng), rand_rational(rng)};
  CHECK(f.nth_deriv(0) == f);
}

TEST_CASE("differentiation is linear in the polynomial part") {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 30; ++trial) {
    Rational s = rand_rational(rng), q = rand_rational(rng);
    Poly pa = rand_poly(rng, 4), pb = rand_poly(rng, 4);
    QArctanForm fa{pa, s, q}, fb{pb, s, q}, fsum{pa + pb, s, q};
    CHECK(fsum.deriv().poly == fa.deriv().poly + fb.deriv().poly);
  }
}

TEST_CASE("q = 0 integer powers match plain polynomial calculus") {
  std::mt19937 rng(59);
  std::uniform_int_distribution<int> spick(1, 5);
  Poly sigma{Rational(1), Rational(0), Rational(1)};
  for (int trial = 0; trial < 20; ++trial) {
    int s = spick(rng);
    std::uniform_int_distribution<int> npick(0, s);
    int n = npick(rng);
    Poly base = rand_poly(rng, 3);

    QArctanForm f{base, Rational(s), Rational(0)};
    QArctanForm d = f.nth_deriv(n);

    Poly expanded = base;
    for (int k = 0; k < s; ++k) expanded = expanded * sigma;
    for (int k = 0; k < n; ++k) expanded = expanded.derivative();

    // d carries (1+x^2)^(s-n); clearing that power must reproduce the direct path
    Poly from_form = d.poly;
    for (int k = 0; k < s - n; ++k) from_form = from_form * sigma;
    CHECK(from_form == expanded);
  }
}

TEST_CASE("gaussian rationals form a field") {
  GaussRat i = GaussRat::i();
  CHECK(i * i == GaussRat(-1));
  GaussRat z(Rational(3, 2), Rational(-5, 7));
  CHECK(z / z == GaussRat(1));
  CHECK((z * i) / i == z);
  CHECK_THROWS_AS(z / GaussRat(0), std::domain_error);
  CHECK(pow(i, 4) == GaussRat(1));
  CHECK(pow(z, 3) == z * z * z);
}

TEST_CASE("quadratic extension arithmetic") {
  QuadExt w = QuadExt::root(Rational(5));  // sqrt(5)
  CHECK(w * w == QuadExt::scalar(Rational(5)));
  QuadExt v(Rational(1), Rational(2), Rational(5));  // 1 + 2 sqrt 5
  CHECK((v / v) == QuadExt::scalar(Rational(1)));
  CHECK(pow(w, 2) == QuadExt::scalar(Rational(5)));
  QuadExt other = QuadExt::root(Rational(3));
  CHECK_THROWS_AS(v * other, std::logic_error);
}
