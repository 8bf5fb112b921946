#ifndef DENSITYLAB_POLYNOMIAL_HPP
#define DENSITYLAB_POLYNOMIAL_HPP

#include <vector>

#include "densitylab/rational.hpp"

namespace densitylab {

/// Integer-coefficient polynomial, lowest degree first. The leading
/// coefficient is nonzero unless the polynomial is zero.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);

  /// Convenience: {c0, c1, ...} from small ints.
  static IntPolynomial from_ints(std::initializer_list<long long> coeffs);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coefficients() const { return coeffs_; }

  Rational eval(const Rational& x) const;
  int sign_at(const Rational& x) const;

  IntPolynomial derivative() const;

  std::string to_string() const;

 private:
  std::vector<BigInt> coeffs_;
};

/// Bracket (low, high) containing exactly one real root of `polynomial`,
/// with a sign change across it.
struct RootBracket {
  Rational low;
  Rational high;
  IntPolynomial polynomial;
};

/// One bracket per distinct real root, pairwise disjoint, in increasing
/// order. Sturm-sequence counting guarantees no root is missed. Roots of
/// even multiplicity are bracketed through the squarefree part.
std::vector<RootBracket> isolate_roots(const IntPolynomial& p);

/// Number of distinct real roots in (a, b], by Sturm sign variations.
int count_roots(const IntPolynomial& p, const Rational& a, const Rational& b);

/// Bisects until the bracket width is <= tol and returns the midpoint.
/// Exits early with the exact value if a bisection point hits the root.
Rational refine_root(const RootBracket& bracket, const Rational& tol);

}  // namespace densitylab

#endif
