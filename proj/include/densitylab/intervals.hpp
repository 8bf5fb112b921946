#ifndef DENSITYLAB_INTERVALS_HPP
#define DENSITYLAB_INTERVALS_HPP

#include <vector>

#include "densitylab/rational.hpp"

namespace densitylab {

/// Open interval (left, right); empty when left == right, matching the
/// convention that (a, b) = {x : a < x < b}.
struct Interval {
  Rational left;
  Rational right;

  bool empty() const { return left >= right; }
  Rational length() const { return empty() ? Rational(0) : right - left; }
  bool contains(const Rational& x) const { return left < x && x < right; }
};

/// Normalized finite disjoint union of open intervals: nonempty intervals,
/// strictly increasing, overlapping ones merged. Abutting intervals are
/// kept distinct so shared endpoints stay visible as endpoints of the set.
class IntervalSet {
 public:
  IntervalSet() = default;

  /// Drops empty intervals, sorts, merges overlapping (not merely
  /// abutting) intervals.
  static IntervalSet normalize(std::vector<Interval> raw);

  const std::vector<Interval>& intervals() const { return intervals_; }
  bool empty() const { return intervals_.empty(); }
  std::size_t size() const { return intervals_.size(); }

  Rational total_measure() const;

  /// Exact lambda(S intersect (x, y)); requires x <= y.
  Rational measure_within(const Rational& x, const Rational& y) const;

  bool contains(const Rational& x) const;

  /// Endpoints, in increasing order (duplicates from abutting intervals
  /// collapse to one entry).
  std::vector<Rational> endpoints() const;

  IntervalSet clipped(const Rational& x, const Rational& y) const;

  /// Merges abutting intervals: the topological-closure view for callers
  /// that do not care about interior endpoints.
  IntervalSet merge_closure() const;

 private:
  std::vector<Interval> intervals_;
};

/// lambda(S intersect I) / lambda(I); I must be nonempty.
Rational relative_measure(const IntervalSet& s, const Interval& window);

/// x -> scale * x + shift, scale > 0.
IntervalSet affine(const IntervalSet& s, const Rational& scale, const Rational& shift);
Interval affine(const Interval& w, const Rational& scale, const Rational& shift);

/// x -> 2 * center - x.
IntervalSet reflect(const IntervalSet& s, const Rational& center);

/// Open complement of S inside (x, y), endpoints of S removed.
IntervalSet complement_within(const IntervalSet& s, const Rational& x, const Rational& y);

/// The set (-inf, 0) union body, with 0 < a1 < b1 < ... < a_r < b_r.
class Configuration {
 public:
  explicit Configuration(IntervalSet body);

  const IntervalSet& body() const { return body_; }

  /// {0, a1, b1, ..., a_r, b_r}.
  std::vector<Rational> endpoints() const;

  /// Exact lambda(C intersect (x, y)) including the half-line part.
  Rational measure_within(const Rational& x, const Rational& y) const;

  Rational last_endpoint() const { return body_.intervals().back().right; }

  /// Scales the body by k > 0 (the half-line is fixed by any positive
  /// scaling about 0).
  Configuration scaled(const Rational& k) const;

 private:
  IntervalSet body_;
};

Rational relative_measure(const Configuration& c, const Interval& window);

}  // namespace densitylab

#endif
