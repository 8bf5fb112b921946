#ifndef DENSITYLAB_ZETA_HPP
#define DENSITYLAB_ZETA_HPP

#include "densitylab/polynomial.hpp"
#include "densitylab/rational.hpp"

namespace densitylab {

/// Defining polynomial of the i-th table constant, i in 1..7.
const IntPolynomial& zeta_polynomial(int i);

/// Bracket of width <= tol around the unique root of the i-th row
/// polynomial inside (0, 1/2). Throws if the row polynomial has no root
/// there (a transcription bug).
RootBracket zeta_bracket(int i, const Rational& tol);

/// The i-th table constant refined to tol.
Rational zeta(int i, const Rational& tol);

/// True iff every inequality listed in table row i holds at delta,
/// evaluated exactly over rationals. Requires 0 < delta < 1/2.
bool check_zeta_row(int i, const Rational& delta);

/// Conservative decision of "delta < zeta_i": accepts only when delta is
/// at or below a certified lower bound of the bracket (width 1e-12).
bool certified_below_zeta(const Rational& delta, int i);

/// Earlier bound polynomials: the two from the prior constructions and the
/// prior lower bound. Index 0: 4x^3+2x^2+3x-1 (lower bound, 0.262978),
/// 1: 8x^3+4x^2+2x-1 (0.271844), 2: 2x^3+2x^2+3x-1 (0.271069).
const IntPolynomial& prior_bound_polynomial(int idx);
Rational prior_bound_root(int idx, const Rational& tol);

}  // namespace densitylab

#endif
