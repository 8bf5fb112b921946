#include "densitylab/intervals.hpp"

#include <algorithm>
#include <stdexcept>

namespace densitylab {

IntervalSet IntervalSet::normalize(std::vector<Interval> raw) {
  std::vector<Interval> kept;
  for (auto& iv : raw)
    if (!iv.empty()) kept.push_back(iv);
  std::sort(kept.begin(), kept.end(), [](const Interval& a, const Interval& b) {
    return a.left < b.left || (a.left == b.left && a.right < b.right);
  });
  IntervalSet out;
  for (auto& iv : kept) {
    if (!out.intervals_.empty() && iv.left < out.intervals_.back().right) {
      // strict overlap merges; abutting stays distinct
      out.intervals_.back().right = rat_max(out.intervals_.back().right, iv.right);
    } else {
      out.intervals_.push_back(iv);
    }
  }
  return out;
}

Rational IntervalSet::total_measure() const {
  Rational m = 0;
  for (const auto& iv : intervals_) m += iv.length();
  return m;
}

Rational IntervalSet::measure_within(const Rational& x, const Rational& y) const {
  if (x > y) throw std::invalid_argument("measure_within: x > y");
  Rational m = 0;
  for (const auto& iv : intervals_) {
    if (iv.right <= x) continue;
    if (iv.left >= y) break;
    m += rat_min(iv.right, y) - rat_max(iv.left, x);
  }
  return m;
}

bool IntervalSet::contains(const Rational& x) const {
  auto it = std::upper_bound(
      intervals_.begin(), intervals_.end(), x,
      [](const Rational& v, const Interval& iv) { return v < iv.left; });
  if (it == intervals_.begin()) return false;
  --it;
  return it->contains(x);
}

std::vector<Rational> IntervalSet::endpoints() const {
  std::vector<Rational> out;
  for (const auto& iv : intervals_) {
    if (out.empty() || out.back() != iv.left) out.push_back(iv.left);
    out.push_back(iv.right);
  }
  return out;
}

IntervalSet IntervalSet::clipped(const Rational& x, const Rational& y) const {
  std::vector<Interval> kept;
  for (const auto& iv : intervals_) {
    Interval c{rat_max(iv.left, x), rat_min(iv.right, y)};
    if (!c.empty()) kept.push_back(c);
  }
  IntervalSet out;
  out.intervals_ = std::move(kept);
  return out;
}

IntervalSet IntervalSet::merge_closure() const {
  IntervalSet out;
  for (const auto& iv : intervals_) {
    if (!out.intervals_.empty() && iv.left <= out.intervals_.back().right) {
      out.intervals_.back().right = rat_max(out.intervals_.back().right, iv.right);
    } else {
      out.intervals_.push_back(iv);
    }
  }
  return out;
}

Rational relative_measure(const IntervalSet& s, const Interval& window) {
  if (window.empty()) throw std::invalid_argument("relative_measure: empty window");
  return s.measure_within(window.left, window.right) / window.length();
}

IntervalSet affine(const IntervalSet& s, const Rational& scale, const Rational& shift) {
  if (scale <= 0) throw std::invalid_argument("affine: scale must be positive");
  std::vector<Interval> mapped;
  for (const auto& iv : s.intervals())
    mapped.push_back({scale * iv.left + shift, scale * iv.right + shift});
  return IntervalSet::normalize(std::move(mapped));
}

Interval affine(const Interval& w, const Rational& scale, const Rational& shift) {
  if (scale <= 0) throw std::invalid_argument("affine: scale must be positive");
  return {scale * w.left + shift, scale * w.right + shift};
}

IntervalSet reflect(const IntervalSet& s, const Rational& center) {
  std::vector<Interval> mapped;
  for (const auto& iv : s.intervals())
    mapped.push_back({2 * center - iv.right, 2 * center - iv.left});
  return IntervalSet::normalize(std::move(mapped));
}

IntervalSet complement_within(const IntervalSet& s, const Rational& x, const Rational& y) {
  if (x >= y) throw std::invalid_argument("complement_within: x >= y");
  IntervalSet closed = s.clipped(x, y).merge_closure();
  std::vector<Interval> gaps;
  Rational cursor = x;
  for (const auto& iv : closed.intervals()) {
    if (iv.left > cursor) gaps.push_back({cursor, iv.left});
    cursor = iv.right;
  }
  if (cursor < y) gaps.push_back({cursor, y});
  IntervalSet out = IntervalSet::normalize(std::move(gaps));
  return out;
}

Configuration::Configuration(IntervalSet body) : body_(std::move(body)) {
  if (body_.empty())
    throw std::invalid_argument("configuration: body must contain at least one interval");
  if (body_.intervals().front().left <= 0)
    throw std::invalid_argument("configuration: body endpoints must be positive");
}

std::vector<Rational> Configuration::endpoints() const {
  std::vector<Rational> out{Rational(0)};
  for (const auto& e : body_.endpoints()) out.push_back(e);
  return out;
}

Rational Configuration::measure_within(const Rational& x, const Rational& y) const {
  if (x > y) throw std::invalid_argument("measure_within: x > y");
  Rational halfline = rat_min(y, Rational(0)) - x;
  if (halfline < 0) halfline = 0;
  return halfline + body_.measure_within(x, y);
}

Configuration Configuration::scaled(const Rational& k) const {
  return Configuration(affine(body_, k, Rational(0)));
}

Rational relative_measure(const Configuration& c, const Interval& window) {
  if (window.empty()) throw std::invalid_argument("relative_measure: empty window");
  return c.measure_within(window.left, window.right) / window.length();
}

}  // namespace densitylab
