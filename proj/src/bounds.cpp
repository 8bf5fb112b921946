#include "densitylab/bounds.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "densitylab/zeta.hpp"

namespace densitylab {

Rational f_value(const LineSet& a, const Rational& p, const Rational& x,
                 const Rational& delta) {
  if (x < p) throw std::invalid_argument("f_value: x must be >= p");
  return (1 - 2 * delta) * x - a.measure_within(p, x);
}

StPoints st_points(const LineSet& a, const Rational& p, const Rational& q,
                   const Rational& delta) {
  if (!(p < q)) throw std::invalid_argument("st_points: p < q required");
  std::vector<Rational> xs{p, q};
  for (const auto& e : a.boundary_points_in(p, q)) xs.push_back(e);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  std::vector<Rational> values;
  values.reserve(xs.size());
  for (const auto& x : xs) values.push_back(f_value(a, p, x, delta));

  StPoints st;
  st.f_min = values.front();
  st.f_max = values.front();
  st.s = xs.front();
  st.t = xs.front();
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (values[i] <= st.f_min) {  // greatest minimizer
      st.f_min = values[i];
      st.s = xs[i];
    }
    if (values[i] > st.f_max) {  // least maximizer
      st.f_max = values[i];
      st.t = xs[i];
    }
  }

  // the four defining implications, at every breakpoint
  for (std::size_t i = 0; i < xs.size(); ++i) {
    bool ok = true;
    if (xs[i] < st.s) ok = values[i] >= st.f_min;
    if (xs[i] > st.s) ok = ok && values[i] > st.f_min;
    if (xs[i] < st.t) ok = ok && values[i] < st.f_max;
    if (xs[i] > st.t) ok = ok && values[i] <= st.f_max;
    if (!ok) throw std::logic_error("st_points: defining inequalities failed");
  }
  return st;
}

VerificationReport check_lemmac(const LineSet& a, const Rational& c,
                                const Rational& gamma, const Rational& delta) {
  if (gamma <= 0) throw std::invalid_argument("check_lemmac: gamma must be positive");
  VerificationReport report;
  report.subject = "one-sided windows from a maximal-density interval";

  DensityProfile prof = a.has_periodic_zone()
                            ? density_profile_capped(a, c, gamma)
                            : density_profile(a, c);
  if (!max_up_to(prof, gamma, delta)) {
    report.skip("hypothesis", "density at gamma is not a >= 1-delta running maximum");
    return report;
  }

  const Rational lo = c - gamma, hi = c + gamma;
  const Rational threshold = 1 - 2 * delta;
  std::vector<Rational> cuts{lo, hi};
  for (const auto& e : a.boundary_points_in(lo, hi)) cuts.push_back(e);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  for (const auto& s : cuts) {
    if (s >= hi) continue;  // s in [c-gamma, c+gamma)
    Rational rel = a.measure_within(s, hi) / (hi - s);
    if (rel < threshold)
      report.violation_at("right window", s,
                          "lambda(A|(s, c+gamma)) = " + to_string(rel));
  }
  for (const auto& t : cuts) {
    if (t <= lo) continue;  // t in (c-gamma, c+gamma]
    Rational rel = a.measure_within(lo, t) / (t - lo);
    if (rel < threshold)
      report.violation_at("left window", t,
                          "lambda(A|(c-gamma, t)) = " + to_string(rel));
  }
  if (report.passed)
    report.condition("conclusion", true,
                     "both one-sided families >= 1-2delta at all breakpoints");
  return report;
}

VerificationReport check_cl3(const LineSet& h, const Rational& p, const Rational& t,
                             const Rational& s, const Rational& q,
                             const Rational& delta) {
  if (!(p <= t && t < s && s <= q))
    throw std::invalid_argument("check_cl3: need p <= t < s <= q");
  VerificationReport report;
  report.subject = "two-window overlap bound";

  const Rational threshold = 1 - 2 * delta;
  Rational rel_ps = h.measure_within(p, s) / (s - p);
  Rational rel_tq = h.measure_within(t, q) / (q - t);
  if (rel_ps < threshold || rel_tq < threshold) {
    report.skip("hypothesis", "one-sided windows below 1-2delta");
    return report;
  }

  Rational rel_pq = h.measure_within(p, q) / (q - p);
  Rational bound1 = (1 - 2 * delta) / (1 + 2 * delta);
  report.condition("(1)", rel_pq >= bound1,
                   "lambda(H|(p,q)) = " + to_string(rel_pq) + " vs " + to_string(bound1));
  if (rel_pq <= (1 - delta) / 2) {
    Rational rel_ts = h.measure_within(t, s) / (s - t);
    Rational bound2 = (1 - delta) * (1 - 2 * delta) / (2 * delta);
    report.condition("(2)", rel_ts >= bound2,
                     "lambda(H|(t,s)) = " + to_string(rel_ts) + " vs " + to_string(bound2));
  } else {
    report.skip("(2)", "extra hypothesis lambda(H|(p,q)) <= (1-delta)/2 not met");
  }
  return report;
}

namespace {

struct CenterCandidate {
  Rational center;
  Rational radius;  // least upper-crossing radius (triangle relation holds)
};

// All centers (drawn from `centers`) whose least (1-delta)-crossing
// interval contains (lo, hi).
std::vector<CenterCandidate> crossing_candidates(const LineSet& line,
                                                 const std::vector<Rational>& centers,
                                                 const Rational& lo, const Rational& hi,
                                                 const Rational& delta,
                                                 const Rational& cap) {
  std::vector<CenterCandidate> out;
  for (const auto& c : centers) {
    DensityProfile prof = density_profile_capped(line, c, cap);
    auto alpha = least_upper_crossing(prof, delta);
    if (!alpha) continue;
    if (c - *alpha <= lo && c + *alpha >= hi) out.push_back({c, *alpha});
  }
  return out;
}

ConditionCWitness condition_c_impl(const LineSet& line,
                                   const std::vector<Rational>& centers,
                                   const Rational& search_cap, const Rational& w,
                                   const Rational& v, const Rational& delta,
                                   const std::vector<Rational>& u_grid) {
  ConditionCWitness out;
  if (!(w < v)) throw std::invalid_argument("condition_c_witness: w < v required");
  Rational rel = line.measure_within(w, v) / (v - w);
  if (rel > (1 - delta) / 2) {
    out.precondition_met = false;
    return out;
  }

  auto outer = crossing_candidates(line, centers, w, v, delta, search_cap);
  if (outer.empty()) {
    out.failed_u = w;  // no outer interval at all
    return out;
  }
  // smallest center helps every slack below
  const CenterCandidate* best_outer = &outer.front();
  for (const auto& cand : outer)
    if (cand.center < best_outer->center) best_outer = &cand;
  out.a = best_outer->center;
  out.alpha = best_outer->radius;

  for (const auto& u : u_grid) {
    if (!(u >= w && u < v)) continue;
    auto inner = crossing_candidates(line, centers, u, v, delta, search_cap);
    Rational rhs = v - u - Rational(2) / (1 - delta) * line.measure_within(u, v);
    bool found = false;
    ConditionCWitness::Entry best;
    for (const auto& cand : inner) {
      Rational slack = (cand.center - out.a) - rhs;
      if (slack < 0) continue;
      if (!found || cand.center > best.b) {
        best = {u, cand.center, cand.radius, slack};
        found = true;
      }
    }
    if (!found) {
      out.failed_u = u;
      return out;
    }
    out.entries.push_back(best);
  }
  return out;
}

}  // namespace

std::vector<Rational> default_u_grid(const IntervalSet& h, const Rational& w,
                                     const Rational& v) {
  std::vector<Rational> grid{w};
  for (const auto& e : h.endpoints())
    if (e >= w && e < v) grid.push_back(e);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

std::vector<Rational> default_u_grid(const PeriodicSet& h, const Rational& w,
                                     const Rational& v) {
  std::vector<Rational> grid{w};
  for (const auto& e : h.endpoints_in(w, v))
    if (e >= w && e < v) grid.push_back(e);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

ConditionCWitness condition_c_witness(const PeriodicSet& h, const Rational& w,
                                      const Rational& v, const Rational& delta,
                                      const std::vector<Rational>& u_grid) {
  auto shared = std::make_shared<const PeriodicSet>(h);
  LineSet line = LineSet::periodized(shared);
  Rational lg = h.measure();
  Rational reach;
  if (1 - delta > lg && h.envelope() > 0) {
    reach = h.envelope() / (1 - delta - lg);
  } else {
    reach = 2 * h.envelope() + 2;
  }
  std::vector<Rational> centers = h.endpoints_in(w - reach - 1, v + reach + 1);
  return condition_c_impl(line, centers, reach + 1, w, v, delta, u_grid);
}

ConditionCWitness condition_c_witness(const IntervalSet& h, const Rational& w,
                                      const Rational& v, const Rational& delta,
                                      const std::vector<Rational>& u_grid) {
  LineSet line = LineSet::from_intervals(h);
  std::vector<Rational> centers = h.endpoints();
  Rational span(1);
  if (!h.empty()) span = h.intervals().back().right - h.intervals().front().left;
  return condition_c_impl(line, centers, span + 1, w, v, delta, u_grid);
}

LemmaxyOutcome lemmaxy_oracle(const IntervalSet& h, const Rational& p,
                              const Rational& q, const Rational& delta,
                              std::optional<unsigned> seed) {
  LemmaxyOutcome outcome;
  VerificationReport& report = outcome.report;
  report.subject = "abstract lower-bound oracle";
  if (!(p < q)) throw std::invalid_argument("lemmaxy_oracle: p < q required");

  if (!certified_below_zeta(delta, 6)) {
    report.skip("precondition", "delta not certified below zeta_6");
    return outcome;
  }
  if (h.empty()) {
    report.skip("precondition", "empty set");
    return outcome;
  }

  LineSet line = LineSet::from_intervals(h);
  const Rational one_minus_delta = 1 - delta;

  // candidate intervals of density >= 1-delta for the cover
  std::vector<Interval> candidates;
  IntervalSet closed = h.merge_closure();
  for (const auto& iv : closed.intervals()) {
    Rational margin = iv.length() * delta / (2 * (1 - delta));
    candidates.push_back({iv.left - margin, iv.right + margin});
  }
  Rational span = h.intervals().back().right - h.intervals().front().left;
  for (const auto& e : h.endpoints()) {
    DensityProfile prof = density_profile(line, e);
    auto alpha = least_upper_crossing(prof, delta);
    if (alpha) candidates.push_back({e - *alpha, e + *alpha});
  }
  std::vector<Interval> verified;
  for (const auto& iv : candidates) {
    if (line.measure_within(iv.left, iv.right) >= one_minus_delta * iv.length())
      verified.push_back(iv);
  }
  (void)span;

  // greedy chain covering (p, q)
  std::sort(verified.begin(), verified.end(),
            [](const Interval& a, const Interval& b) { return a.left < b.left; });
  Rational reach = p;
  bool progress = true;
  while (reach < q && progress) {
    progress = false;
    Rational best = reach;
    for (const auto& iv : verified) {
      if (iv.left > reach) break;
      if (iv.right > best) best = iv.right;
    }
    if (best > reach) {
      reach = best;
      progress = true;
    }
  }
  if (reach < q) {
    report.skip("cover", "no finite cover of (p, q) by density >= 1-delta intervals found");
    return outcome;
  }
  report.condition("cover", true, "(p, q) covered by density >= 1-delta intervals");

  // condition (C) on all endpoint-pair windows with low relative measure
  std::vector<Rational> marks{p, q};
  for (const auto& e : h.endpoints())
    if (e >= p && e <= q) marks.push_back(e);
  std::sort(marks.begin(), marks.end());
  marks.erase(std::unique(marks.begin(), marks.end()), marks.end());

  std::optional<std::mt19937_64> rng;
  if (seed) rng.emplace(*seed);

  const Rational low_bound = (1 - delta) / 2;
  for (std::size_t i = 0; i < marks.size(); ++i) {
    for (std::size_t j = i + 1; j < marks.size(); ++j) {
      const Rational& w = marks[i];
      const Rational& v = marks[j];
      if (line.measure_within(w, v) > low_bound * (v - w)) continue;
      std::vector<Rational> grid = default_u_grid(h, w, v);
      if (rng) {
        std::uniform_int_distribution<long> numer(0, 999);
        for (int extra = 0; extra < 3; ++extra) {
          Rational t(numer(*rng), 1000);
          grid.push_back(w + t * (v - w) * Rational(999, 1000));
        }
        std::sort(grid.begin(), grid.end());
        grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
      }
      ConditionCWitness witness = condition_c_witness(h, w, v, delta, grid);
      if (!witness.ok()) {
        report.skip("condition (C)",
                    "no witness for window (" + to_string(w) + ", " + to_string(v) +
                        ") at u = " +
                        (witness.failed_u ? to_string(*witness.failed_u) : "?"));
        return outcome;
      }
    }
  }
  report.condition("condition (C)", true, "witnesses found on all low-density windows");

  Rational lhs = h.total_measure();
  Rational rhs = (1 - delta) * (1 + 2 * delta) / (1 + 3 * delta) * (q - p);
  Rational correction = lhs - h.measure_within(p, q);
  report.condition("conclusion", lhs >= rhs,
                   "lambda H = " + to_string(lhs) + " vs bound " + to_string(rhs) +
                       "; mass outside (p,q) = " + to_string(correction));
  outcome.status = lhs >= rhs ? LemmaxyOutcome::Status::holds
                              : LemmaxyOutcome::Status::violation;
  return outcome;
}

}  // namespace densitylab
