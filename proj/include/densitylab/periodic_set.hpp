#ifndef DENSITYLAB_PERIODIC_SET_HPP
#define DENSITYLAB_PERIODIC_SET_HPP

#include <vector>

#include "densitylab/intervals.hpp"

namespace densitylab {

/// A delta-good-set candidate G inside [0, 1] and its periodization
/// H = G + Z. The generator follows the convention
///   G = [0, nu1) u (mu2, nu2) u ... u (mu_r, 1],
/// so integer points are interior to H and the endpoints of H in [0, 1)
/// are nu1, mu2, nu2, ..., mu_r.
class PeriodicSet {
 public:
  /// `generator` lists the pieces of G in order; the first must start at 0
  /// and the last must end at 1, and at least one gap must exist.
  explicit PeriodicSet(IntervalSet generator);

  const IntervalSet& generator() const { return generator_; }
  const Rational& measure() const { return measure_; }  // lambda G

  /// Endpoints of H inside [0, 1), increasing.
  const std::vector<Rational>& endpoints_mod1() const { return endpoints_; }

  /// True iff G = 1 - G as sets.
  bool mirror_symmetric() const { return symmetric_; }

  /// Cumulative measure F(t) = lambda(H intersect (0, t)), any rational t.
  Rational cumulative(const Rational& t) const;

  /// Exact lambda(H intersect (x, y)).
  Rational measure_within(const Rational& x, const Rational& y) const;

  bool contains(const Rational& x) const;

  /// Envelope constant: M = max over one period of |F(x) - x * lambda G|,
  /// so |lambda(H and I) - lambda G * |I|| <= 2M for every interval I.
  const Rational& envelope() const { return envelope_; }

  /// Intervals of H overlapping (x, y), clipped to it. Abutting clips at
  /// non-endpoints of H introduce the cut point as an interval endpoint.
  IntervalSet intervals_in(const Rational& x, const Rational& y) const;

  /// Endpoints of H in [x, y], increasing.
  std::vector<Rational> endpoints_in(const Rational& x, const Rational& y) const;

  /// Largest endpoint of H that is <= x (exists for every x by periodicity).
  Rational endpoint_at_or_below(const Rational& x) const;

  Rational endpoint_strictly_below(const Rational& x) const;
  Rational endpoint_strictly_above(const Rational& x) const;

 private:
  IntervalSet generator_;
  Rational measure_;
  std::vector<Rational> endpoints_;
  Rational envelope_;
  bool symmetric_ = false;
  // base intervals of H with left endpoints in [0, 1): the piece spanning
  // the integer comes first as (mu_r - 1, nu1)
  std::vector<Interval> base_;
};

}  // namespace densitylab

#endif
