// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Tolerances are pinned in code.

#include <atomic>
#include <chrono>
#include <iostream>
#include <random>
#include <thread>
#include <vector>

#include "densitylab/bounds.hpp"
#include "densitylab/constructions.hpp"
#include "densitylab/periodic.hpp"
#include "densitylab/zeta.hpp"
#include "generators.hpp"

using namespace densitylab;

namespace {

Rational rat(long long n, long long d = 1) { return Rational(n, d); }

int failures = 0;

void run(int index, const std::string& name, bool (*fn)()) {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  std::string error;
  try {
    ok = fn();
  } catch (const std::exception& e) {
    error = e.what();
  }
  auto t1 = std::chrono::steady_clock::now();
  double secs = std::chrono::duration<double>(t1 - t0).count();
  std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << index << ": " << name << "  ("
            << secs << " s)";
  if (!error.empty()) std::cout << "  [" << error << "]";
  std::cout << std::endl;
  if (!ok) ++failures;
}

// 1. Constants to 1e-6 / 1e-9.
bool criterion_constants() {
  const Rational tol = rat_pow10_neg(9);
  const long long decimals[7] = {268486, 268700, 270690, 273301, 275255, 277479, 280776};
  for (int i = 1; i <= 7; ++i) {
    if (rat_abs(zeta(i, tol) - rat(decimals[i - 1], 1000000)) > rat_pow10_neg(6))
      return false;
  }
  // zeta7 vs (sqrt(17)-3)/4 to 1e-9, squared exactly
  Rational z7 = zeta(7, rat_pow10_neg(12));
  Rational lo = 4 * z7 + 3 - 4 * rat_pow10_neg(9);
  Rational hi = 4 * z7 + 3 + 4 * rat_pow10_neg(9);
  if (!(lo * lo <= 17 && hi * hi >= 17)) return false;
  const long long prior[3] = {262978, 271844, 271069};
  for (int i = 0; i < 3; ++i) {
    if (rat_abs(prior_bound_root(i, tol) - rat(prior[i], 1000000)) > rat_pow10_neg(6))
      return false;
  }
  return true;
}

// 2. Exact identities at delta = 27/100.
bool criterion_identities() {
  const Rational delta = rat(27, 100);
  KurkaParams p = kurka_params(delta);
  if (p.phi + 2 * p.psi + 2 * p.alpha + p.beta != 1) return false;
  if (p.phi + 2 * p.alpha != (1 - delta) * (1 + 2 * delta) / (1 + 3 * delta)) return false;

  LineSet sn = LineSet::from_intervals(kurka_sn(delta, 3));
  if (density_at(sn, p.phi, p.phi) != rat(73, 100)) return false;                    // case I
  if (density_at(sn, 1 - p.psi, p.psi + p.phi) != rat(73, 100)) return false;       // case III
  if (density_at(sn, p.phi + p.psi + p.alpha, p.alpha) < rat(73, 100)) return false;  // case II

  PeriodicSet g = good_set_example(delta);
  if (g.measure() != rat(5621, 9050)) return false;
  if (4 * delta * delta / (1 - 2 * delta) != rat(729, 1150)) return false;
  if (!(g.measure() <= rat(729, 1150))) return false;
  return true;
}

// 3. Counterexample reproduction with the frozen minimal N.
bool criterion_counterexample() {
  const Rational delta = rat(27, 100);
  auto n = minimal_counterexample_n(delta, 100);
  if (!n || *n != 18) return false;  // frozen regression value
  Configuration cn = kurka_cn(delta, *n);
  VerificationReport report = is_counterexample(cn, delta);
  if (!report.passed) return false;
  LineSet line = LineSet::from_configuration(cn);
  for (const auto& f : report.findings) {
    if (!f.endpoint || !f.omega) return false;
    Rational d = density_at(line, *f.endpoint, *f.omega);
    if (!(d <= delta || d >= 1 - delta)) return false;
  }
  return true;
}

// 4. Sweep bracketing of the transition around the table root.
bool criterion_sweep() {
  const Rational lo = rat(266, 1000), hi = rat(272, 1000), step = rat_pow10_neg(4);
  std::vector<Rational> deltas;
  for (Rational d = lo; d <= hi; d += step) deltas.push_back(d);
  std::vector<int> minimal(deltas.size(), -1);
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= deltas.size()) break;
      auto n = minimal_counterexample_n(deltas[i], 100);
      minimal[i] = n ? *n : -1;
    }
  };
  unsigned jobs = std::max(2u, std::thread::hardware_concurrency());
  std::vector<std::thread> pool;
  for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  for (auto& th : pool) th.join();

  // single transition from not-found to found
  std::size_t first_found = deltas.size();
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    if (minimal[i] > 0) {
      first_found = i;
      break;
    }
  }
  if (first_found == 0 || first_found == deltas.size()) return false;
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    if (i < first_found && minimal[i] > 0) return false;
    if (i >= first_found && minimal[i] < 0) return false;
  }
  // the transition interval must sit within (zeta1 - 5e-4, zeta1 + 5e-4)
  RootBracket z1 = zeta_bracket(1, rat_pow10_neg(12));
  Rational last_absent = deltas[first_found - 1];
  Rational first_present = deltas[first_found];
  Rational margin = 5 * rat_pow10_neg(4);
  bool ok = last_absent > z1.low - margin && first_present < z1.high + margin;
  std::cout << "      transition in (" << to_decimal(last_absent, 6) << ", "
            << to_decimal(first_present, 6) << "), zeta1 = 0.268486...\n";
  // monotone minimal N wherever defined
  for (std::size_t i = first_found; i + 1 < deltas.size(); ++i)
    if (minimal[i + 1] > minimal[i]) return false;
  return ok;
}

// 5. Good-set checks across the delta window and the cut grid.
bool criterion_goodset() {
  // 20 rational deltas inside (0.2690, 0.3000)
  for (int j = 1; j <= 20; ++j) {
    Rational d = rat(2690, 10000) + rat(j, 1) * rat(310, 10000 * 21);
    PeriodicSet g = good_set_example(d);
    if (!check_good_i(g, d).passed) return false;
  }
  const Rational delta = rat(27, 100);
  PeriodicSet g = good_set_example(delta);
  std::vector<Cut> cuts = default_cut_grid(g, 3);
  if (cuts.size() < 1000) return false;
  VerificationReport report = check_good_ii_bounded(g, delta, cuts);
  std::cout << "      " << cuts.size() << " cuts checked\n";
  return report.passed;
}

// 6. Property suites: theorems as oracles, zero tolerated failures.
bool criterion_properties() {
  std::mt19937_64 rng(20260810);
  auto rand_rat = [&](long long lo, long long hi, long long den) {
    std::uniform_int_distribution<long long> num(lo * den, hi * den);
    return Rational(num(rng), den);
  };
  auto rand_set = [&](long long lo, long long hi, int max_pieces) {
    std::uniform_int_distribution<int> count(1, max_pieces);
    std::vector<Interval> raw;
    int n = count(rng);
    for (int i = 0; i < n; ++i) {
      Rational a = rand_rat(lo, hi, 12), b = rand_rat(lo, hi, 12);
      raw.push_back({rat_min(a, b), rat_max(a, b)});
    }
    return IntervalSet::normalize(std::move(raw));
  };
  const Rational delta = rat(27, 100);

  // one-sided window lemma, 1000 hypothesis-met cases
  int met = 0;
  for (int trial = 0; trial < 2000 && met < 1000; ++trial) {
    auto inst = testgen::make_lemmac_instance(rng, delta);
    LineSet line = LineSet::from_intervals(inst.set);
    auto crossing = least_upper_crossing(density_profile(line, inst.center), delta);
    if (!crossing) continue;
    VerificationReport rep = check_lemmac(line, inst.center, *crossing, delta);
    if (!rep.findings.empty() && rep.findings.front().skipped) continue;
    ++met;
    if (!rep.passed) return false;
  }
  if (met < 1000) return false;

  // two-window overlap bound, 1000 hypothesis-met cases
  met = 0;
  for (int trial = 0; trial < 3000 && met < 1000; ++trial) {
    Rational d = (trial % 2 == 0) ? rat(1, 4) : delta;
    auto inst = testgen::make_cl3_instance(rng, d);
    LineSet line = LineSet::from_intervals(inst.set);
    VerificationReport rep = check_cl3(line, inst.p, inst.t, inst.s, inst.q, d);
    if (!rep.findings.empty() && rep.findings.front().skipped) continue;
    ++met;
    if (!rep.passed) return false;
  }
  if (met < 1000) return false;

  // st_points defining inequalities (verified internally; throws on failure)
  for (int trial = 0; trial < 1000; ++trial) {
    IntervalSet s = rand_set(-3, 5, 5);
    LineSet line = LineSet::from_intervals(s);
    Rational p = rand_rat(-4, 1, 6);
    Rational q = p + rat_abs(rand_rat(0, 5, 6)) + rat(1, 9);
    st_points(line, p, q, delta);
  }

  // profile piecewise monotonicity and extrema vs brute force
  for (int trial = 0; trial < 1000; ++trial) {
    IntervalSet s = rand_set(-2, 4, 4);
    if (s.empty()) continue;
    LineSet line = LineSet::from_intervals(s);
    Rational c = rand_rat(-3, 3, 8);
    DensityProfile prof = density_profile(line, c);
    for (const auto& piece : prof.pieces) {
      Rational hi = piece.unbounded ? Rational(piece.lo + 2) : piece.hi;
      Rational prev;
      bool first = true;
      for (int k = 1; k <= 5; ++k) {
        Rational omega = piece.lo + (hi - piece.lo) * rat(k, 6);
        if (omega <= 0) continue;
        Rational value = (piece.a + piece.b * omega) / (2 * omega);
        if (!first) {
          if (piece.a > 0 && value > prev) return false;
          if (piece.a < 0 && value < prev) return false;
          if (piece.a == 0 && value != prev) return false;
        }
        prev = value;
        first = false;
      }
    }
    DensityExtrema ext = density_extrema(prof);
    Rational top = prof.breakpoints.empty() ? rat(2) : Rational(prof.breakpoints.back() + 1);
    bool sup_seen = false, inf_seen = false;
    std::vector<Rational> samples = prof.breakpoints;
    for (Rational w = rat(1, 1000); w <= top; w += rat_max(top / 200, rat(1, 1000)))
      samples.push_back(w);
    for (const auto& w : samples) {
      if (w <= 0) continue;
      Rational d = density_at(line, c, w);
      if (d > ext.sup.value || d < ext.inf.value) return false;
      if (d == ext.sup.value) sup_seen = true;
      if (d == ext.inf.value) inf_seen = true;
    }
    if (ext.sup.attained && !sup_seen) return false;
    if (ext.inf.attained && !inf_seen) return false;
  }

  // affine and reflection invariance of relative measures
  for (int trial = 0; trial < 1000; ++trial) {
    IntervalSet s = rand_set(-4, 4, 6);
    Rational lo = rand_rat(-5, 5, 8), hi = rand_rat(-5, 5, 8);
    if (lo == hi) continue;
    Interval window{rat_min(lo, hi), rat_max(lo, hi)};
    Rational scale = rat_abs(rand_rat(0, 3, 8)) + rat(1, 5);
    Rational shift = rand_rat(-4, 4, 8);
    if (relative_measure(s, window) !=
        relative_measure(affine(s, scale, shift), affine(window, scale, shift)))
      return false;
    Rational center = rand_rat(-3, 3, 8);
    Interval mirrored{2 * center - window.right, 2 * center - window.left};
    if (relative_measure(s, window) != relative_measure(reflect(s, center), mirrored))
      return false;
  }

  // periodic envelope |density - lambda G| <= M / omega
  {
    PeriodicSet g = good_set_example(delta);
    auto shared = std::make_shared<const PeriodicSet>(g);
    LineSet line = LineSet::periodized(shared);
    for (int trial = 0; trial < 1000; ++trial) {
      Rational c = rand_rat(-6, 6, 9);
      Rational omega = rat_abs(rand_rat(0, 8, 9)) + rat(1, 17);
      Rational d = density_at(line, c, omega);
      if (rat_abs(d - g.measure()) * omega > g.envelope()) return false;
    }
  }
  return true;
}

// 7. The equality case of the lower-bound lemma on the optimal example.
bool criterion_lemmaxy() {
  const Rational delta = rat(27, 100);
  PeriodicSet g = good_set_example(delta);
  Rational bound = (1 - delta) * (1 + 2 * delta) / (1 + 3 * delta);
  if (periodic_measure(g, rat(0), rat(5)) != 5 * bound) return false;

  PeriodicProfile pp = periodic_density_profile(g, rat(0), delta);
  Rational margin = 2 * pp.tail.w;
  IntervalSet truncated = g.intervals_in(-margin, Rational(5) + margin);
  LemmaxyOutcome outcome = lemmaxy_oracle(truncated, rat(0), rat(5), delta, 1u);
  if (outcome.status != LemmaxyOutcome::Status::holds) return false;
  // the report states the boundary correction explicitly
  for (const auto& f : outcome.report.findings)
    if (f.label == "conclusion" && f.detail.find("mass outside") == std::string::npos)
      return false;
  return true;
}

}  // namespace

int main() {
  run(1, "table constants and prior-work roots", criterion_constants);
  run(2, "exact construction identities at 27/100", criterion_identities);
  run(3, "counterexample reproduction (minimal N = 18)", criterion_counterexample);
  run(4, "sweep brackets the transition at the cubic root", criterion_sweep);
  run(5, "good-set conditions (i) and (ii)", criterion_goodset);
  run(6, "property suites (theorems as oracles)", criterion_properties);
  run(7, "lower-bound lemma equality case", criterion_lemmaxy);
  if (failures > 0) {
    std::cout << failures << " criterion(s) failed" << std::endl;
    return 1;
  }
  std::cout << "all acceptance criteria passed" << std::endl;
  return 0;
}
