// Seeded instance generators for the randomized theorem-oracle suites.
#ifndef DENSITYLAB_TESTS_GENERATORS_HPP
#define DENSITYLAB_TESTS_GENERATORS_HPP

#include <random>

#include "densitylab/intervals.hpp"

namespace densitylab::testgen {

inline Rational uniform_rat(std::mt19937_64& rng, long long lo_num, long long hi_num,
                            long long den) {
  std::uniform_int_distribution<long long> num(lo_num, hi_num);
  return Rational(num(rng), den);
}

/// Instance for the one-sided window lemma: a window around c filled except
/// for small gaps, one of them touching c, so the density at c climbs from
/// 1/2 (or 0) to at least 1-delta at some least crossing radius.
struct LemmacInstance {
  IntervalSet set;
  Rational center;
};

inline LemmacInstance make_lemmac_instance(std::mt19937_64& rng, const Rational& delta) {
  Rational c = uniform_rat(rng, -40, 40, 10);
  Rational gamma = uniform_rat(rng, 5, 30, 10);
  Rational budget = 2 * delta * gamma * Rational(9, 10);

  // one gap adjacent to c (left or right), optionally one more elsewhere
  Rational w1 = budget * uniform_rat(rng, 2, 7, 10);
  bool left_side = rng() % 2 == 0;
  Interval gap1 = left_side ? Interval{c - w1, c} : Interval{c, c + w1};

  std::vector<Interval> gaps{gap1};
  if (rng() % 2 == 0) {
    Rational w2 = (budget - w1) * uniform_rat(rng, 1, 8, 10);
    Rational offset = gamma * uniform_rat(rng, 2, 8, 10);
    Rational start = rng() % 2 == 0 ? Rational(c + offset) : Rational(c - offset - w2);
    if (w2 > 0) gaps.push_back({start, start + w2});
  }

  Rational lo = c - gamma - uniform_rat(rng, 0, 10, 10);
  Rational hi = c + gamma + uniform_rat(rng, 0, 10, 10);
  std::vector<Interval> pieces;
  std::sort(gaps.begin(), gaps.end(),
            [](const Interval& a, const Interval& b) { return a.left < b.left; });
  Rational cursor = lo;
  for (const auto& g : gaps) {
    if (g.left > cursor) pieces.push_back({cursor, g.left});
    cursor = rat_max(cursor, g.right);
  }
  if (cursor < hi) pieces.push_back({cursor, hi});
  return {IntervalSet::normalize(std::move(pieces)), c};
}

/// Instance for the two-window overlap bound with the hypotheses holding by
/// construction: mass adjacent to t on the left, full (t, s), mass adjacent
/// to s on the right.
struct Cl3Instance {
  IntervalSet set;
  Rational p, t, s, q;
};

inline Cl3Instance make_cl3_instance(std::mt19937_64& rng, const Rational& delta) {
  Rational k = uniform_rat(rng, 10, 60, 10);
  Rational m = uniform_rat(rng, 10, 60, 10);
  Rational l;
  bool force_low_total = rng() % 2 == 0;
  if (force_low_total && delta > Rational(1, 3) == false) {
    // middle window long enough that, with minimal flanking mass below,
    // the extra hypothesis of part (2) holds: l/(k+l+m) >= (1-3d)/(4d)
    Rational g = (1 - 3 * delta) / (4 * delta);
    Rational ratio = g / (1 - g) * (1 + uniform_rat(rng, 1, 10, 10));
    l = (k + m) * ratio;
  } else {
    l = uniform_rat(rng, 2, 25, 10);
  }
  Rational p = uniform_rat(rng, -30, 30, 10);
  Rational t = p + k, s = t + l, q = s + m;

  const Rational threshold = 1 - 2 * delta;
  Rational a_min = rat_max(threshold * (k + l) - l, Rational(0));
  Rational b_min = rat_max(threshold * (l + m) - l, Rational(0));
  Rational a = a_min, b = b_min;
  if (!force_low_total) {
    a = a_min + (k - a_min) * uniform_rat(rng, 0, 3, 10);
    b = b_min + (m - b_min) * uniform_rat(rng, 0, 3, 10);
  }

  std::vector<Interval> pieces;
  if (a > 0) pieces.push_back({t - a, t});
  pieces.push_back({t, s});
  if (b > 0) pieces.push_back({s, s + b});
  return {IntervalSet::normalize(std::move(pieces)), p, t, s, q};
}

}  // namespace densitylab::testgen

#endif
