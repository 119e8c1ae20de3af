#pragma once

#include <initializer_list>
#include <vector>

#include "romscarf/rational.hpp"

namespace romscarf {

/// Dense univariate polynomial over a field K, coefficients in ascending
/// degree. Normalized: no trailing zero coefficients, so the zero polynomial
/// has an empty coefficient vector and degree() == -1.
template <class K>
class PolyT {
 public:
  PolyT() = default;
  explicit PolyT(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }
  PolyT(std::initializer_list<K> coeffs) : c_(coeffs) { trim(); }

  static PolyT constant(const K& v) { return PolyT(std::vector<K>{v}); }
  static PolyT one() { return constant(K(1)); }
  static PolyT x() { return PolyT(std::vector<K>{K(0), K(1)}); }
  static PolyT monomial(const K& coeff, int k) {
    std::vector<K> c(static_cast<size_t>(k) + 1, K(0));
    c.back() = coeff;
    return PolyT(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }

  K coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return K(0);
    return c_[static_cast<size_t>(k)];
  }
  K leading() const { return c_.empty() ? K(0) : c_.back(); }
  const std::vector<K>& coeffs() const { return c_; }

  PolyT operator-() const {
    std::vector<K> out = c_;
    for (auto& v : out) v = -v;
    return PolyT(std::move(out));
  }

  friend PolyT operator+(const PolyT& a, const PolyT& b) {
    std::vector<K> out(std::max(a.c_.size(), b.c_.size()), K(0));
    for (size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
    return PolyT(std::move(out));
  }
  friend PolyT operator-(const PolyT& a, const PolyT& b) { return a + (-b); }
  friend PolyT operator*(const PolyT& a, const PolyT& b) {
    if (a.is_zero() || b.is_zero()) return PolyT();
    std::vector<K> out(a.c_.size() + b.c_.size() - 1, K(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return PolyT(std::move(out));
  }
  friend PolyT operator*(const PolyT& a, const K& s) { return a.scaled(s); }
  friend PolyT operator*(const K& s, const PolyT& a) { return a.scaled(s); }

  PolyT scaled(const K& s) const {
    std::vector<K> out = c_;
    for (auto& v : out) v *= s;
    return PolyT(std::move(out));
  }

  PolyT derivative() const {
    if (c_.size() <= 1) return PolyT();
    std::vector<K> out(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * K(static_cast<long long>(i));
    return PolyT(std::move(out));
  }

  /// Horner evaluation.
  K eval(const K& x) const {
    K acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  friend bool operator==(const PolyT& a, const PolyT& b) { return a.c_ == b.c_; }
  friend bool operator!=(const PolyT& a, const PolyT& b) { return !(a == b); }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == K(0)) c_.pop_back();
  }
  std::vector<K> c_;
};

using Poly = PolyT<Rational>;

std::vector<double> to_double_coeffs(const Poly& p);
double horner(const std::vector<double>& coeffs, double x);

}  // namespace romscarf
