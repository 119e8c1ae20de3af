#include <cmath>
#include <vector>

#include "doctest.h"
#include "romscarf/gauss_rational.hpp"
#include "romscarf/scarf.hpp"

using namespace romscarf;

namespace {

std::vector<double> grid(double lo, double hi, int n) {
  std::vector<double> g(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) g[static_cast<size_t>(i)] = lo + (hi - lo) * i / (n - 1);
  return g;
}

int sign_changes(const std::vector<double>& values) {
  int changes = 0;
  double prev = 0.0;
  for (double v : values) {
    if (std::abs(v) < 1e-14) continue;
    if (prev != 0.0 && std::signbit(v) != std::signbit(prev)) ++changes;
    prev = v;
  }
  return changes;
}

}  // namespace

TEST_CASE("potential values at the origin and at infinity") {
  ScarfParams p105(10, 5, 1);
  CHECK(potential_ii(p105, 0.0) == doctest::Approx(15.0));
  CHECK(potential_ii(p105, 50.0) == doctest::Approx(100.0));
  CHECK(potential_ii(p105, -50.0) == doctest::Approx(100.0));

  ScarfParams pb0(4, 0, 1);
  CHECK(potential_ii(pb0, 0.0) == doctest::Approx(-4.0));

  CHECK(potential_i(p105, 0.0) == doctest::Approx(15.0));
  CHECK(potential_i(pb0, 0.0) == doctest::Approx(-4.0));
  CHECK(potential_i(p105, 1.5) > 1e3);
  CHECK_THROWS_AS(potential_i(p105, 2.0), std::domain_error);
}

TEST_CASE("hyperbolic spectrum") {
  ScarfParams p(10, 5, 1);
  auto levels = spectrum_ii(p);
  REQUIRE(levels.size() == 10);
  std::vector<long long> eps_expected = {-100, -81, -64, -49, -36, -25, -16, -9, -4, -1};
  std::vector<long long> e_expected = {0, 19, 36, 51, 64, 75, 84, 91, 96, 99};
  for (int n = 0; n < 10; ++n) {
    CHECK(levels[n].epsilon == Rational(eps_expected[n]));
    CHECK(levels[n].e == Rational(e_expected[n]));
  }

  auto half = spectrum_ii(ScarfParams(Rational(1, 2), 0, 1));
  REQUIRE(half.size() == 1);
  CHECK(half[0].epsilon == Rational(-1, 4));

  CHECK(spectrum_ii(ScarfParams(Rational(5, 2), 1, 1)).size() == 3);
  CHECK(spectrum_ii(ScarfParams(3, 0, 1)).size() == 3);
}

TEST_CASE("trigonometric spectrum") {
  auto levels = spectrum_i(ScarfParams(10, 5, 1), 3);
  REQUIRE(levels.size() == 4);
  CHECK(levels[0].epsilon == Rational(100));
  CHECK(levels[1].epsilon == Rational(121));
  CHECK(levels[3].epsilon == Rational(169));
  CHECK(levels[1].e == Rational(21));

  auto scaled = spectrum_i(ScarfParams(1, 0, 2), 3);
  CHECK(scaled[3].epsilon == Rational(49));
}

TEST_CASE("scale reduction of the hyperbolic spectrum") {
  // v^(a,b,alpha)(z) = alpha^2 v^(a/alpha, b/alpha, 1)(alpha z)
  ScarfParams p(10, 5, 2);
  auto levels = spectrum_ii(p);
  REQUIRE(levels.size() == 5);  // n < a/alpha = 5
  for (const auto& lv : levels) {
    Rational gap = Rational(10) - Rational(2 * lv.n);
    CHECK(lv.epsilon == -gap * gap);
  }
  double z = 0.37;
  ScarfParams reduced(5, Rational(5, 2), 1);
  CHECK(potential_ii(p, z) == doctest::Approx(4.0 * potential_ii(reduced, 2 * z)).epsilon(1e-13));
}

TEST_CASE("bound-state wave functions") {
  ScarfParams p(10, 5, 1);

  auto psi0 = wavefunction_ii(p, 0);
  CHECK(psi0.form.poly == Poly::one());
  CHECK(psi0.form.power == Rational(-5));
  CHECK(psi0.form.arc == Rational(-5));

  auto psi1 = wavefunction_ii(p, 1);
  CHECK(psi1.form.poly == Poly{Rational(-10), Rational(-19)});

  CHECK_THROWS_AS(wavefunction_ii(ScarfParams(3, 0, 1), 3), std::domain_error);
  CHECK_THROWS_AS(wavefunction_ii(p, 10), std::domain_error);
}

TEST_CASE("wave functions are normalized and count their nodes") {
  ScarfParams p(10, 5, 1);
  for (int n : {0, 1, 3}) {
    auto psi = wavefunction_ii(p, n);
    auto integrand = [&](double x) {
      double v = psi.value_x(x);
      return v * v / std::sqrt(1 + x * x);
    };
    double total = integrate_line(integrand, QuadratureSpec::defaults()).value;
    CHECK(total == doctest::Approx(1.0).epsilon(1e-10));

    std::vector<double> samples;
    for (double z : grid(-8, 8, 4001)) samples.push_back(psi.value(z));
    CHECK(sign_changes(samples) == n);
  }
}

TEST_CASE("bound states are mutually orthogonal under the line measure") {
  ScarfParams p(10, 5, 1);
  std::vector<WaveFunction> states;
  for (int n = 0; n < 10; ++n) states.push_back(wavefunction_ii(p, n));
  QuadratureSpec spec;
  spec.nodes = 512;
  for (int n = 0; n < 10; ++n) {
    for (int m = n + 1; m < 10; ++m) {
      auto integrand = [&](double x) {
        return states[n].value_x(x) * states[m].value_x(x) / std::sqrt(1 + x * x);
      };
      double overlap = integrate_line(integrand, spec).value;
      CHECK(std::abs(overlap) < 1e-8);
    }
  }
}

TEST_CASE("superpotential antiderivative verified by differentiation") {
  // d/dz [ (a/al) log cosh(al z) + (2b/al) atan(tanh(al z / 2)) ]
  //   = a tanh(al z) + b sech(al z)
  for (auto [a, b, al] : {std::array<double, 3>{2, 1, 1}, {10, 5, 1}, {3, -2, 2}}) {
    for (double z : grid(-4, 4, 41)) {
      double h = 1e-5;
      auto F = [&](double zz) {
        return (a / al) * std::log(std::cosh(al * zz)) +
               (2 * b / al) * std::atan(std::tanh(al * zz / 2));
      };
      double numeric = (F(z + h) - F(z - h)) / (2 * h);
      double analytic = a * std::tanh(al * z) + b / std::cosh(al * z);
      CHECK(numeric == doctest::Approx(analytic).epsilon(1e-8));
    }
  }
}

TEST_CASE("susy ground state") {
  auto zs = grid(-6, 6, 121);
  auto vals = susy_groundstate(ScarfParams(1, 0, 1), zs);
  for (size_t i = 0; i < zs.size(); ++i) {
    CHECK(vals[i] == doctest::Approx(std::pow(std::cosh(zs[i]), -1.0)).epsilon(1e-12));
    CHECK(vals[i] == doctest::Approx(vals[zs.size() - 1 - i]).epsilon(1e-12));
  }
  CHECK(susy_groundstate(ScarfParams(1, 0, 1), std::vector<double>{0.0})[0] ==
        doctest::Approx(1.0));
}

TEST_CASE("susy ground state matches the n = 0 bound state pointwise") {
  for (auto [a, b] : {std::pair<int, int>{2, 1}, {10, 5}}) {
    ScarfParams p(a, b, 1);
    auto psi0 = wavefunction_ii(p, 0);
    auto zs = grid(-10, 10, 201);
    auto susy = susy_groundstate(p, zs);
    double ref = psi0.value(0.0) / susy[100];
    for (size_t i = 0; i < zs.size(); ++i) {
      double ratio = psi0.value(zs[i]) / susy[i];
      CHECK(ratio == doctest::Approx(ref).epsilon(1e-10));
    }
  }
}

TEST_CASE("transformed equation has an exactly zero residual at the true eigenvalue") {
  CHECK(schrodinger_residual_ii(ScarfParams(2, 1, 1), 0).is_zero());
  CHECK(schrodinger_residual_ii(ScarfParams(3, 0, 1), 1).is_zero());

  for (Rational a : {Rational(3, 2), Rational(2), Rational(3), Rational(10)}) {
    for (Rational b : {Rational(0), Rational(1), Rational(5)}) {
      ScarfParams p(a, b, 1);
      for (int n = 0; Rational(n) < a && n <= 6; ++n) {
        CHECK(schrodinger_residual_ii(p, n).is_zero());
        Rational gap = a - Rational(n);
        CHECK(!scarf_ode_residual(p, n, -gap * gap + Rational(1)).is_zero());
        CHECK(!scarf_ode_residual(p, n, -gap * gap - Rational(1, 7)).is_zero());
      }
    }
  }
}

TEST_CASE("trigonometric bound states ride on jacobi polynomials") {
  ScarfParams p(10, 5, 1);
  auto psi = wavefunction_i(p, 1);
  CHECK(psi.gamma == Rational(5));
  CHECK(psi.delta == Rational(15));
  // classical P_1^{9/2, 29/2}
  Rational slope = (Rational(9, 2) + Rational(29, 2) + Rational(2)) / Rational(2);
  CHECK(psi.jacobi == Poly{Rational(9, 2) + Rational(1) - slope, slope});

  auto psi0 = wavefunction_i(p, 0);
  CHECK(psi0.jacobi == Poly::one());
  double x = 0.3, z = std::asin(x);
  double expect = psi0.norm * std::pow(1 - x, 2.5) * std::pow(1 + x, 7.5);
  CHECK(psi0.value(z) == doctest::Approx(expect).epsilon(1e-12));

  CHECK_THROWS_AS(wavefunction_i(ScarfParams(3, 4, 1), 0), std::domain_error);
}

TEST_CASE("trigonometric states are normalized and orthogonal") {
  ScarfParams p(5, 2, 1);
  QuadratureSpec spec;
  spec.nodes = 512;
  double half = M_PI / 2 * (1 - 1e-12);
  std::vector<TrigWaveFunction> states;
  for (int n = 0; n < 4; ++n) states.push_back(wavefunction_i(p, n));
  for (int n = 0; n < 4; ++n)
    for (int m = n; m < 4; ++m) {
      auto integrand = [&](double z) { return states[n].value(z) * states[m].value(z); };
      double overlap = integrate_interval(integrand, -half, half, spec).value;
      CHECK(overlap == doctest::Approx(n == m ? 1.0 : 0.0).epsilon(1e-8));
    }
}

TEST_CASE("imaginary substitution carries one spectrum into the other, exactly") {
  // (i a + n (-i))^2 = -(a - n)^2 in Q(i)
  std::vector<Rational> as = {Rational(1, 2), 1, Rational(5, 3), 2, Rational(7, 2), 4, 5,
                              Rational(13, 2), 7, 10};
  int checked = 0;
  for (const auto& a : as) {
    for (int n : {0, 1, 2, 5}) {
      GaussRat lhs = pow(GaussRat(Rational(0), a) + GaussRat(Rational(n)) * GaussRat(Rational(0), Rational(-1)), 2);
      Rational gap = a - Rational(n);
      CHECK(lhs == GaussRat(-gap * gap));
      ++checked;
    }
  }
  CHECK(checked >= 20);
}
