#include "densitylab/zeta.hpp"

#include <array>
#include <stdexcept>

namespace densitylab {

namespace {

const std::array<IntPolynomial, 7>& table_polys() {
  // coefficients lowest degree first
  static const std::array<IntPolynomial, 7> polys = {
      IntPolynomial::from_ints({-1, 1, 8, 8}),    // 8x^3+8x^2+x-1
      IntPolynomial::from_ints({1, 0, -16, 8}),   // 8x^3-16x^2+1
      IntPolynomial::from_ints({-3, 10, 4}),      // 4x^2+10x-3
      IntPolynomial::from_ints({-1, 5, -6, 4}),   // 4x^3-6x^2+5x-1
      IntPolynomial::from_ints({3, -12, 4}),      // 4x^2-12x+3
      IntPolynomial::from_ints({1, -2, -8, 8}),   // 8x^3-8x^2-2x+1
      IntPolynomial::from_ints({-1, 3, 2}),       // 2x^2+3x-1
  };
  return polys;
}

const std::array<IntPolynomial, 3>& prior_polys() {
  static const std::array<IntPolynomial, 3> polys = {
      IntPolynomial::from_ints({-1, 3, 2, 4}),  // 4x^3+2x^2+3x-1
      IntPolynomial::from_ints({-1, 2, 4, 8}),  // 8x^3+4x^2+2x-1
      IntPolynomial::from_ints({-1, 3, 2, 2}),  // 2x^3+2x^2+3x-1
  };
  return polys;
}

RootBracket root_in_unit_half(const IntPolynomial& p, const Rational& tol) {
  const Rational lo = 0, hi(1, 2);
  if (count_roots(p, lo, hi) != 1)
    throw std::runtime_error("expected exactly one root in (0, 1/2) of " + p.to_string());
  for (const RootBracket& b : isolate_roots(p)) {
    // narrow until the bracket sits inside (0, 1/2), then to tol
    Rational blo = b.low, bhi = b.high;
    int slo = p.sign_at(blo);
    while (!(blo > lo && bhi < hi) || bhi - blo > tol) {
      if (bhi - blo <= tol && (bhi <= lo || blo >= hi)) break;  // root elsewhere
      Rational mid = (blo + bhi) / 2;
      int sm = p.sign_at(mid);
      if (sm == 0) {
        Rational eps = rat_min(tol, bhi - blo) / 4;
        blo = mid - eps;
        bhi = mid + eps;
        break;
      }
      (sm == slo ? blo : bhi) = mid;
    }
    if (blo > lo && bhi < hi) return {blo, bhi, b.polynomial};
  }
  throw std::runtime_error("no root of " + p.to_string() + " in (0, 1/2)");
}

}  // namespace

const IntPolynomial& zeta_polynomial(int i) {
  if (i < 1 || i > 7) throw std::invalid_argument("zeta index out of range");
  return table_polys()[static_cast<std::size_t>(i - 1)];
}

RootBracket zeta_bracket(int i, const Rational& tol) {
  return root_in_unit_half(zeta_polynomial(i), tol);
}

Rational zeta(int i, const Rational& tol) {
  RootBracket b = zeta_bracket(i, tol);
  return refine_root(b, tol);
}

bool certified_below_zeta(const Rational& delta, int i) {
  static const Rational tol = rat_pow10_neg(12);
  RootBracket b = zeta_bracket(i, tol);
  return delta <= b.low;
}

const IntPolynomial& prior_bound_polynomial(int idx) {
  if (idx < 0 || idx > 2) throw std::invalid_argument("prior bound index out of range");
  return prior_polys()[static_cast<std::size_t>(idx)];
}

Rational prior_bound_root(int idx, const Rational& tol) {
  return refine_root(root_in_unit_half(prior_bound_polynomial(idx), tol), tol);
}

bool check_zeta_row(int i, const Rational& d) {
  if (!(d > 0 && d < Rational(1, 2)))
    throw std::invalid_argument("check_zeta_row: delta must be in (0, 1/2)");
  const Rational one = 1;
  switch (i) {
    case 1:
      return 4 * d * d / (1 - 2 * d) < (1 - d) * (1 + 2 * d) / (1 + 3 * d);
    case 2:
      return 2 / (1 - 2 * d) - (1 - 2 * d) * (1 - 2 * d) / (1 - 3 * d - 2 * d * d) > 0;
    case 3:
      return one < (1 - 2 * d) / (4 * d * d) * (1 - Rational(4, 3) * d) &&
             (-4 * d * d + 6 * d - 1) * (1 - d) >= 8 * d * d * d + 4 * d - 1;
    case 4:
      return 4 * d * d * d < (1 - 2 * d) * (1 - 3 * d);
    case 5:
      return 4 * d * d - 12 * d + 3 > 0;
    case 6:
      return 2 * d >= 2 * d / (1 - 2 * d) - Rational(1, 2) / (1 - d);
    case 7:
      return 1 - 3 * d - 2 * d * d > 0 && d < (1 - 2 * d) / (1 + 2 * d) &&
             (1 - d) * (1 - 2 * d) / (2 * d) > 2 * d &&
             -14 * d * d + 15 * d - 3 <= 2 * (4 * d - 1) * (1 - 2 * d);
    default:
      throw std::invalid_argument("zeta index out of range");
  }
}

}  // namespace densitylab
