#include "romscarf/rational.hpp"

#include <cctype>

namespace romscarf {

Rational Rational::parse(const std::string& text) {
  auto bad = [&] { return std::invalid_argument("Rational::parse: cannot parse '" + text + "'"); };
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw bad();

  auto slash = s.find('/');
  if (slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (num.empty() || den.empty()) throw bad();
    try {
      return Rational(BigInt(num), BigInt(den));
    } catch (const std::runtime_error&) {
      throw bad();
    }
  }

  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string head = s.substr(0, dot), frac = s.substr(dot + 1);
    if (frac.empty()) throw bad();
    for (char ch : frac)
      if (!std::isdigit(static_cast<unsigned char>(ch))) throw bad();
    bool neg = !head.empty() && head[0] == '-';
    if (head == "-" || head == "+") head += "0";
    if (head.empty()) head = "0";
    try {
      BigInt scale = 1;
      for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
      BigInt whole(head);
      BigInt tail(frac);
      BigInt num = whole * scale + (neg ? -tail : tail);
      return Rational(num, scale);
    } catch (const std::runtime_error&) {
      throw bad();
    }
  }

  try {
    return Rational(BigInt(s), BigInt(1));
  } catch (const std::runtime_error&) {
    throw bad();
  }
}

BigInt Rational::floor() const {
  BigInt num = numerator(), den = denominator();
  BigInt q = num / den;
  if (num < 0 && q * den != num) --q;
  return q;
}

std::string Rational::str() const {
  std::string out = numerator().str();
  if (!is_integer()) out += "/" + denominator().str();
  return out;
}

Rational pow(const Rational& x, int k) {
  if (k < 0) {
    if (x.is_zero()) throw std::domain_error("pow: zero to negative power");
    return Rational(1) / pow(x, -k);
  }
  Rational result(1), base = x;
  while (k > 0) {
    if (k & 1) result *= base;
    base *= base;
    k >>= 1;
  }
  return result;
}

std::optional<Rational> rational_sqrt(const Rational& x) {
  if (x.sign() < 0) return std::nullopt;
  BigInt num = x.numerator(), den = x.denominator();
  BigInt rn = boost::multiprecision::sqrt(num);
  BigInt rd = boost::multiprecision::sqrt(den);
  if (rn * rn != num || rd * rd != den) return std::nullopt;
  return Rational(rn, rd);
}

}  // namespace romscarf
