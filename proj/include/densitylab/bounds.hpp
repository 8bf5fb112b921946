#ifndef DENSITYLAB_BOUNDS_HPP
#define DENSITYLAB_BOUNDS_HPP

#include <optional>

#include "densitylab/density.hpp"
#include "densitylab/periodic_set.hpp"
#include "densitylab/verifier.hpp"

namespace densitylab {

/// f_{A,p,q}(x) = (1 - 2 delta) x - lambda(A ^ (p, x)); piecewise linear
/// with slopes 1-2delta off A and -2delta on A.
Rational f_value(const LineSet& a, const Rational& p, const Rational& x,
                 const Rational& delta);

/// Greatest minimizer s and least maximizer t of f_{A,p,q} on [p, q],
/// with the extreme values. The four defining threshold implications are
/// re-verified at every breakpoint on construction.
struct StPoints {
  Rational s;
  Rational t;
  Rational f_min;
  Rational f_max;
};

StPoints st_points(const LineSet& a, const Rational& p, const Rational& q,
                   const Rational& delta);

/// The one-sided density lemma: under the hypothesis that the density of A
/// at c attains its maximum on (0, gamma] at gamma with value >= 1-delta,
/// every window anchored at c-gamma or c+gamma has relative measure
/// >= 1-2delta. Hypothesis failure is reported as a skip.
VerificationReport check_lemmac(const LineSet& a, const Rational& c,
                                const Rational& gamma, const Rational& delta);

/// The two-window overlap bound: given p <= t < s <= q with
/// lambda(H|(p,s)) >= 1-2delta and lambda(H|(t,q)) >= 1-2delta, asserts
/// (1) lambda(H|(p,q)) >= (1-2delta)/(1+2delta), and
/// (2) lambda(H|(t,s)) >= (1-delta)(1-2delta)/2delta whenever
///     lambda(H|(p,q)) <= (1-delta)/2.
VerificationReport check_cl3(const LineSet& h, const Rational& p, const Rational& t,
                             const Rational& s, const Rational& q,
                             const Rational& delta);

/// Witness bundle for condition (C): an outer interval I_alpha(a)
/// containing (w, v) with the triangle relation, and per grid point u an
/// interval I_beta(b) containing (u, v) with the triangle relation and
///   slack = (b - a) - (v - u - (2/(1-delta)) lambda(H ^ (u, v))) >= 0.
struct ConditionCWitness {
  Rational a;
  Rational alpha;
  struct Entry {
    Rational u;
    Rational b;
    Rational beta;
    Rational slack;
  };
  std::vector<Entry> entries;
  std::optional<Rational> failed_u;  // first u with no admissible witness
  bool precondition_met = true;      // lambda(H|(w,v)) <= (1-delta)/2
  bool ok() const { return precondition_met && !failed_u; }
};

/// Periodized variant: centers range over endpoints of H near (w, v).
ConditionCWitness condition_c_witness(const PeriodicSet& h, const Rational& w,
                                      const Rational& v, const Rational& delta,
                                      const std::vector<Rational>& u_grid);

/// Finite variant over an explicit interval union.
ConditionCWitness condition_c_witness(const IntervalSet& h, const Rational& w,
                                      const Rational& v, const Rational& delta,
                                      const std::vector<Rational>& u_grid);

/// Default grid: {w} plus the endpoints of H inside [w, v).
std::vector<Rational> default_u_grid(const IntervalSet& h, const Rational& w,
                                     const Rational& v);
std::vector<Rational> default_u_grid(const PeriodicSet& h, const Rational& w,
                                     const Rational& v);

/// End-to-end check of the abstract lower-bound lemma on a finite set:
/// certify delta < zeta_6, find a finite cover of (p, q) by intervals of
/// density >= 1-delta, certify condition (C) on all endpoint-pair windows
/// with lambda(H|(w,v)) <= (1-delta)/2, then test
///   lambda H >= ((1-delta)(1+2delta)/(1+3delta)) (q - p)
/// exactly. A conclusion failure on certified hypotheses would indicate an
/// implementation bug, never new mathematics.
struct LemmaxyOutcome {
  enum class Status { hypotheses_unmet, holds, violation };
  Status status = Status::hypotheses_unmet;
  VerificationReport report;
};

LemmaxyOutcome lemmaxy_oracle(const IntervalSet& h, const Rational& p,
                              const Rational& q, const Rational& delta,
                              std::optional<unsigned> seed = std::nullopt);

}  // namespace densitylab

#endif
