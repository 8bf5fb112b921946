#ifndef DENSITYLAB_RATIONAL_HPP
#define DENSITYLAB_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace densitylab {

using BigInt = boost::multiprecision::cpp_int;

/// Exact arbitrary-precision fraction; the universal scalar of the toolkit.
/// Canonical form (positive denominator, reduced) is maintained by the
/// backend after every operation.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt num(const Rational& q) { return numerator(q); }
inline BigInt den(const Rational& q) { return denominator(q); }

BigInt pow10(unsigned k);

/// 10^-k as an exact rational.
Rational rat_pow10_neg(unsigned k);

/// Largest integer <= q.
BigInt rat_floor(const Rational& q);
BigInt rat_ceil(const Rational& q);

Rational rat_abs(const Rational& q);
Rational rat_min(const Rational& a, const Rational& b);
Rational rat_max(const Rational& a, const Rational& b);

/// Parses "num/den" or "n". Throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(const std::string& text);

/// "num/den", or just "n" when the denominator is 1.
std::string to_string(const Rational& q);

/// Decimal rendering with round-half-even at `digits` fractional digits.
std::string to_decimal(const Rational& q, unsigned digits);

}  // namespace densitylab

#endif
