#include "densitylab/line_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace densitylab {

LineSet LineSet::from_intervals(IntervalSet s) {
  LineSet out;
  if (!s.empty()) {
    out.left_edge_ = s.intervals().front().left;
    out.right_edge_ = s.intervals().back().right;
  }
  out.middle_ = std::move(s);
  return out;
}

LineSet LineSet::from_configuration(const Configuration& c) {
  LineSet out;
  out.left_ = Zone::solid;
  out.left_edge_ = 0;
  out.right_edge_ = c.last_endpoint();
  out.middle_ = c.body();
  return out;
}

LineSet LineSet::periodized(std::shared_ptr<const PeriodicSet> p) {
  LineSet out;
  Rational anchor = p->endpoints_mod1().front();
  out.left_ = Zone::periodic;
  out.right_ = Zone::periodic;
  out.left_edge_ = anchor;
  out.right_edge_ = anchor;
  out.period_ = std::move(p);
  return out;
}

LineSet LineSet::halfline_cut(std::shared_ptr<const PeriodicSet> p,
                              const Rational& a, const Rational& b) {
  if (a >= b) throw std::invalid_argument("halfline_cut: a < b required");
  LineSet out;
  out.left_ = Zone::solid;
  out.left_edge_ = a;
  out.right_edge_ = b;
  out.middle_ = p->intervals_in(a, b);
  out.period_ = std::move(p);
  return out;
}

LineSet LineSet::cut_to_halfline(std::shared_ptr<const PeriodicSet> p,
                                 const Rational& a, const Rational& b) {
  if (a >= b) throw std::invalid_argument("cut_to_halfline: a < b required");
  LineSet out;
  out.left_ = Zone::empty;
  out.right_ = Zone::solid;
  out.left_edge_ = a;
  out.right_edge_ = b;
  out.middle_ = p->intervals_in(a, b);
  out.period_ = std::move(p);
  return out;
}

LineSet LineSet::cut_below(std::shared_ptr<const PeriodicSet> p, const Rational& b) {
  LineSet out;
  out.left_ = Zone::periodic;
  out.left_edge_ = p->endpoint_at_or_below(b - 2);
  out.right_edge_ = b;
  out.middle_ = p->intervals_in(out.left_edge_, b);
  out.period_ = std::move(p);
  return out;
}

LineSet LineSet::cut_above(std::shared_ptr<const PeriodicSet> p, const Rational& a) {
  LineSet out;
  out.left_ = Zone::empty;
  out.right_ = Zone::periodic;
  out.left_edge_ = a;
  out.right_edge_ = p->endpoint_at_or_below(a + 3);
  out.middle_ = p->intervals_in(a, out.right_edge_);
  out.period_ = std::move(p);
  return out;
}

namespace {

Rational zone_measure(LineSet::Zone z, const PeriodicSet* p,
                      const Rational& x, const Rational& y) {
  if (x >= y) return 0;
  switch (z) {
    case LineSet::Zone::empty: return 0;
    case LineSet::Zone::solid: return y - x;
    case LineSet::Zone::periodic: return p->measure_within(x, y);
  }
  return 0;
}

}  // namespace

Rational LineSet::measure_within(const Rational& x, const Rational& y) const {
  if (x > y) throw std::invalid_argument("measure_within: x > y");
  Rational total = 0;
  total += zone_measure(left_, period_.get(), x, rat_min(y, left_edge_));
  {
    Rational lo = rat_max(x, left_edge_), hi = rat_min(y, right_edge_);
    if (lo < hi) total += middle_.measure_within(lo, hi);
  }
  total += zone_measure(right_, period_.get(), rat_max(x, right_edge_), y);
  return total;
}

bool LineSet::contains(const Rational& x) const {
  if (x < left_edge_) {
    switch (left_) {
      case Zone::empty: return false;
      case Zone::solid: return true;
      case Zone::periodic: return period_->contains(x);
    }
  }
  if (x > right_edge_) {
    switch (right_) {
      case Zone::empty: return false;
      case Zone::solid: return true;
      case Zone::periodic: return period_->contains(x);
    }
  }
  if (x == left_edge_ || x == right_edge_) return false;
  return middle_.contains(x);
}

bool LineSet::covered_just_left(const Rational& x) const {
  // sample membership between x and the nearest structure point below it
  if (x <= left_edge_) {
    switch (left_) {
      case Zone::empty: return false;
      case Zone::solid: return true;
      case Zone::periodic: {
        Rational below = period_->endpoint_strictly_below(x);
        return contains((below + x) / 2);
      }
    }
  }
  if (x > right_edge_) {
    switch (right_) {
      case Zone::empty: return false;
      case Zone::solid: return true;
      case Zone::periodic: {
        Rational below = rat_max(period_->endpoint_strictly_below(x), right_edge_);
        return contains((below + x) / 2);
      }
    }
  }
  Rational below = left_edge_;
  for (const auto& iv : middle_.intervals()) {
    if (iv.left < x) below = rat_max(below, iv.left);
    if (iv.right < x) below = rat_max(below, iv.right);
  }
  return contains((below + x) / 2);
}

bool LineSet::covered_just_right(const Rational& x) const {
  if (x >= right_edge_) {
    switch (right_) {
      case Zone::empty: return false;
      case Zone::solid: return true;
      case Zone::periodic: {
        Rational above = period_->endpoint_strictly_above(x);
        return contains((x + above) / 2);
      }
    }
  }
  if (x < left_edge_) {
    switch (left_) {
      case Zone::empty: return false;
      case Zone::solid: return true;
      case Zone::periodic: {
        Rational above = rat_min(period_->endpoint_strictly_above(x), left_edge_);
        return contains((x + above) / 2);
      }
    }
  }
  Rational above = right_edge_;
  for (const auto& iv : middle_.intervals()) {
    if (iv.left > x) above = rat_min(above, iv.left);
    if (iv.right > x) above = rat_min(above, iv.right);
  }
  return contains((x + above) / 2);
}

std::vector<Rational> LineSet::boundary_points_in(const Rational& lo, const Rational& hi) const {
  std::vector<Rational> candidates;
  auto push = [&](const Rational& v) {
    if (v >= lo && v <= hi) candidates.push_back(v);
  };
  push(left_edge_);
  push(right_edge_);
  for (const auto& iv : middle_.intervals()) {
    push(iv.left);
    push(iv.right);
  }
  if (left_ == Zone::periodic && lo < left_edge_)
    for (const auto& e : period_->endpoints_in(lo, rat_min(hi, left_edge_))) push(e);
  if (right_ == Zone::periodic && hi > right_edge_)
    for (const auto& e : period_->endpoints_in(rat_max(lo, right_edge_), hi)) push(e);

  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  std::vector<Rational> out;
  for (const auto& x : candidates) {
    if (contains(x)) continue;  // interior point
    if (covered_just_left(x) || covered_just_right(x)) out.push_back(x);
  }
  return out;
}

std::vector<Rational> LineSet::boundary_points() const {
  if (has_periodic_zone())
    throw std::logic_error("boundary_points: periodic tails have infinitely many");
  return boundary_points_in(left_edge_ - 1, right_edge_ + 1);
}

}  // namespace densitylab
