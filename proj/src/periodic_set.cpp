#include "densitylab/periodic_set.hpp"

#include <stdexcept>

namespace densitylab {

PeriodicSet::PeriodicSet(IntervalSet generator) : generator_(std::move(generator)) {
  const auto& iv = generator_.intervals();
  if (iv.size() < 2)
    throw std::invalid_argument("periodic set: generator needs at least one gap");
  if (iv.front().left != 0 || iv.back().right != 1)
    throw std::invalid_argument("periodic set: generator must span [0, ...) and (..., 1]");
  for (std::size_t i = 0; i + 1 < iv.size(); ++i)
    if (iv[i].right == iv[i + 1].left)
      throw std::invalid_argument("periodic set: abutting generator pieces");

  measure_ = generator_.total_measure();

  // nu1, mu2, nu2, ..., mu_r  (0 and 1 are interior to H)
  for (std::size_t i = 0; i < iv.size(); ++i) {
    if (i > 0) endpoints_.push_back(iv[i].left);
    if (i + 1 < iv.size()) endpoints_.push_back(iv[i].right);
  }

  // base intervals of H; the piece spanning the integer comes first
  base_.push_back({iv.back().left - 1, iv.front().right});
  for (std::size_t i = 1; i + 1 < iv.size(); ++i) base_.push_back(iv[i]);

  Rational m = 0;
  for (const auto& e : generator_.endpoints()) {
    Rational dev = rat_abs(cumulative(e) - e * measure_);
    m = rat_max(m, dev);
  }
  envelope_ = m;

  symmetric_ = true;
  const std::size_t n = iv.size();
  for (std::size_t i = 0; i < n && symmetric_; ++i) {
    const Interval& a = iv[i];
    const Interval& b = iv[n - 1 - i];
    if (a.left != 1 - b.right || a.right != 1 - b.left) symmetric_ = false;
  }
}

Rational PeriodicSet::cumulative(const Rational& t) const {
  BigInt k = rat_floor(t);
  Rational frac = t - Rational(k);
  return Rational(k) * measure_ + generator_.measure_within(Rational(0), frac);
}

Rational PeriodicSet::measure_within(const Rational& x, const Rational& y) const {
  if (x > y) throw std::invalid_argument("measure_within: x > y");
  return cumulative(y) - cumulative(x);
}

bool PeriodicSet::contains(const Rational& x) const {
  Rational frac = x - Rational(rat_floor(x));
  if (frac == 0) return true;  // integer points are interior
  return generator_.contains(frac);
}

IntervalSet PeriodicSet::intervals_in(const Rational& x, const Rational& y) const {
  std::vector<Interval> out;
  if (x >= y) return IntervalSet::normalize(std::move(out));
  BigInt k_lo = rat_floor(x - base_.front().right);
  BigInt k_hi = rat_ceil(y - base_.front().left);
  for (BigInt k = k_lo; k <= k_hi; ++k) {
    for (const auto& iv : base_) {
      Interval shifted{iv.left + Rational(k), iv.right + Rational(k)};
      Interval clip{rat_max(shifted.left, x), rat_min(shifted.right, y)};
      if (!clip.empty()) out.push_back(clip);
    }
  }
  return IntervalSet::normalize(std::move(out));
}

std::vector<Rational> PeriodicSet::endpoints_in(const Rational& x, const Rational& y) const {
  std::vector<Rational> out;
  if (x > y) return out;
  for (BigInt k = rat_floor(x) - 1; k <= rat_ceil(y); ++k) {
    for (const auto& e : endpoints_) {
      Rational v = e + Rational(k);
      if (v >= x && v <= y) out.push_back(v);
    }
  }
  return out;
}

Rational PeriodicSet::endpoint_at_or_below(const Rational& x) const {
  for (BigInt k = rat_floor(x); ; --k) {
    for (auto it = endpoints_.rbegin(); it != endpoints_.rend(); ++it) {
      Rational v = *it + Rational(k);
      if (v <= x) return v;
    }
  }
}

Rational PeriodicSet::endpoint_strictly_below(const Rational& x) const {
  for (BigInt k = rat_floor(x); ; --k) {
    for (auto it = endpoints_.rbegin(); it != endpoints_.rend(); ++it) {
      Rational v = *it + Rational(k);
      if (v < x) return v;
    }
  }
}

Rational PeriodicSet::endpoint_strictly_above(const Rational& x) const {
  for (BigInt k = rat_floor(x); ; ++k) {
    for (const auto& e : endpoints_) {
      Rational v = e + Rational(k);
      if (v > x) return v;
    }
  }
}

}  // namespace densitylab
