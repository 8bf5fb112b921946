#include "densitylab/rational.hpp"

#include <cctype>

namespace densitylab {

BigInt pow10(unsigned k) {
  BigInt r = 1;
  BigInt base = 10;
  while (k > 0) {
    if (k & 1u) r *= base;
    base *= base;
    k >>= 1u;
  }
  return r;
}

Rational rat_pow10_neg(unsigned k) { return Rational(1, pow10(k)); }

BigInt rat_floor(const Rational& q) {
  BigInt n = num(q), d = den(q);
  BigInt quot = n / d;  // truncates toward zero
  if (n < 0 && quot * d != n) --quot;
  return quot;
}

BigInt rat_ceil(const Rational& q) { return -rat_floor(-q); }

Rational rat_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }
Rational rat_min(const Rational& a, const Rational& b) { return a <= b ? a : b; }
Rational rat_max(const Rational& a, const Rational& b) { return a >= b ? a : b; }

namespace {

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!is_integer_token(text))
      throw std::invalid_argument("malformed rational: '" + text + "'");
    return Rational(BigInt(text));
  }
  std::string ns = text.substr(0, slash);
  std::string ds = text.substr(slash + 1);
  if (!is_integer_token(ns) || !is_integer_token(ds))
    throw std::invalid_argument("malformed rational: '" + text + "'");
  BigInt d(ds);
  if (d == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  return Rational(BigInt(ns), d);
}

std::string to_string(const Rational& q) {
  if (den(q) == 1) return num(q).str();
  return num(q).str() + "/" + den(q).str();
}

std::string to_decimal(const Rational& q, unsigned digits) {
  const bool neg = q < 0;
  BigInt n = neg ? BigInt(-num(q)) : num(q);
  const BigInt d = den(q);
  const BigInt scale = pow10(digits);
  n *= scale;
  BigInt quot = n / d;
  const BigInt rem = n - quot * d;
  // round half to even
  const BigInt twice = rem * 2;
  if (twice > d || (twice == d && (quot & 1) == 1)) ++quot;

  std::string s = quot.str();
  if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
  std::string out;
  if (neg && quot != 0) out += '-';
  out += s.substr(0, s.size() - digits);
  if (digits > 0) {
    out += '.';
    out += s.substr(s.size() - digits);
  }
  return out;
}

}  // namespace densitylab
