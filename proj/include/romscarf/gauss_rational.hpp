#pragma once

#include "romscarf/polynomial.hpp"
#include "romscarf/rational.hpp"

namespace romscarf {

/// Element of Q(i): re + im*i with exact rational parts.
struct GaussRat {
  Rational re, im;

  GaussRat() = default;
  GaussRat(long long n) : re(n) {}  // NOLINT: implicit on purpose
  GaussRat(Rational real) : re(std::move(real)) {}
  GaussRat(Rational real, Rational imag) : re(std::move(real)), im(std::move(imag)) {}

  static GaussRat i() { return GaussRat(Rational(0), Rational(1)); }

  bool is_real() const { return im.is_zero(); }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  GaussRat conj() const { return GaussRat(re, -im); }
  Rational norm2() const { return re * re + im * im; }

  GaussRat operator-() const { return GaussRat(-re, -im); }
  GaussRat& operator+=(const GaussRat& o) { re += o.re; im += o.im; return *this; }
  GaussRat& operator-=(const GaussRat& o) { re -= o.re; im -= o.im; return *this; }
  GaussRat& operator*=(const GaussRat& o) {
    Rational r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = r;
    return *this;
  }
  GaussRat& operator/=(const GaussRat& o) {
    Rational n2 = o.norm2();
    if (n2.is_zero()) throw std::domain_error("GaussRat: division by zero");
    GaussRat num = *this * o.conj();
    re = num.re / n2;
    im = num.im / n2;
    return *this;
  }

  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
  friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }
};

GaussRat pow(const GaussRat& x, int k);

using GaussPoly = PolyT<GaussRat>;

/// Element of Q(sqrt(delta)) for a fixed non-square rational delta:
/// value = r + s*sqrt(delta). Both operands of a binary op must carry the
/// same delta.
struct QuadExt {
  Rational r, s;
  Rational delta;

  QuadExt() = default;
  QuadExt(long long n) : r(n), delta(0) {}  // NOLINT: delta-free scalar
  QuadExt(Rational rr, Rational ss, Rational dd)
      : r(std::move(rr)), s(std::move(ss)), delta(std::move(dd)) {}

  static QuadExt scalar(const Rational& v) { return QuadExt(v, Rational(0), Rational(0)); }
  static QuadExt root(const Rational& delta) { return QuadExt(Rational(0), Rational(1), delta); }

  bool is_rational() const { return s.is_zero(); }
  bool is_zero() const { return r.is_zero() && s.is_zero(); }

  QuadExt operator-() const { return QuadExt(-r, -s, delta); }
  friend QuadExt operator+(const QuadExt& a, const QuadExt& b) {
    return QuadExt(a.r + b.r, a.s + b.s, join(a, b));
  }
  friend QuadExt operator-(const QuadExt& a, const QuadExt& b) { return a + (-b); }
  friend QuadExt operator*(const QuadExt& a, const QuadExt& b) {
    Rational d = join(a, b);
    return QuadExt(a.r * b.r + a.s * b.s * d, a.r * b.s + a.s * b.r, d);
  }
  friend QuadExt operator/(const QuadExt& a, const QuadExt& b) {
    Rational d = join(a, b);
    Rational n2 = b.r * b.r - b.s * b.s * d;
    if (n2.is_zero()) throw std::domain_error("QuadExt: division by zero");
    QuadExt num = a * QuadExt(b.r, -b.s, d);
    return QuadExt(num.r / n2, num.s / n2, d);
  }
  friend bool operator==(const QuadExt& a, const QuadExt& b) { return a.r == b.r && a.s == b.s; }
  friend bool operator!=(const QuadExt& a, const QuadExt& b) { return !(a == b); }

 private:
  // Scalars carry delta = 0 and adopt the other operand's field.
  static Rational join(const QuadExt& a, const QuadExt& b) {
    if (a.s.is_zero() || a.delta.is_zero()) return b.delta;
    if (b.s.is_zero() || b.delta.is_zero()) return a.delta;
    if (a.delta != b.delta) throw std::logic_error("QuadExt: mixed field extensions");
    return a.delta;
  }
};

QuadExt pow(const QuadExt& x, int k);

}  // namespace romscarf
