#ifndef DENSITYLAB_LINE_SET_HPP
#define DENSITYLAB_LINE_SET_HPP

#include <memory>
#include <vector>

#include "densitylab/intervals.hpp"
#include "densitylab/periodic_set.hpp"

namespace densitylab {

/// A measurable subset of the line built from a finite middle part and two
/// tails. The middle is an explicit union of open intervals on
/// (left_edge, right_edge); each tail is empty, a solid half-line, or a
/// copy of a periodized set H. Configurations, finite interval unions,
/// periodizations and the cut sets of the delta-good-set conditions are
/// all instances.
class LineSet {
 public:
  enum class Zone { empty, solid, periodic };

  static LineSet from_intervals(IntervalSet s);
  static LineSet from_configuration(const Configuration& c);
  static LineSet periodized(std::shared_ptr<const PeriodicSet> p);

  /// ((-inf, a) u H) \ [b, inf)
  static LineSet halfline_cut(std::shared_ptr<const PeriodicSet> p,
                              const Rational& a, const Rational& b);
  /// (H u (b, inf)) \ (-inf, a]
  static LineSet cut_to_halfline(std::shared_ptr<const PeriodicSet> p,
                                 const Rational& a, const Rational& b);
  /// H \ [b, inf)
  static LineSet cut_below(std::shared_ptr<const PeriodicSet> p, const Rational& b);
  /// H \ (-inf, a]
  static LineSet cut_above(std::shared_ptr<const PeriodicSet> p, const Rational& a);

  Zone left_zone() const { return left_; }
  Zone right_zone() const { return right_; }
  bool has_periodic_zone() const {
    return left_ == Zone::periodic || right_ == Zone::periodic;
  }

  const IntervalSet& middle() const { return middle_; }
  const Rational& left_edge() const { return left_edge_; }
  const Rational& right_edge() const { return right_edge_; }
  const std::shared_ptr<const PeriodicSet>& period() const { return period_; }

  Rational measure_within(const Rational& x, const Rational& y) const;
  bool contains(const Rational& x) const;

  /// Is (x - eps, x) inside the set for some eps > 0?
  bool covered_just_left(const Rational& x) const;
  bool covered_just_right(const Rational& x) const;

  /// Boundary points of the set inside [lo, hi], increasing.
  std::vector<Rational> boundary_points_in(const Rational& lo, const Rational& hi) const;

  /// All boundary points; requires both tails finite (empty or solid).
  std::vector<Rational> boundary_points() const;

 private:
  LineSet() = default;

  Zone left_ = Zone::empty;
  Zone right_ = Zone::empty;
  Rational left_edge_;
  Rational right_edge_;
  IntervalSet middle_;
  std::shared_ptr<const PeriodicSet> period_;
};

}  // namespace densitylab

#endif
