#include "densitylab/constructions.hpp"

#include <stdexcept>

namespace densitylab {

KurkaParams kurka_params(const Rational& d) {
  if (!(d > 0 && d < Rational(1, 2)))
    throw std::invalid_argument("kurka_params: delta must be in (0, 1/2)");
  KurkaParams p;
  p.delta = d;
  Rational q = 1 + 3 * d;
  p.alpha = (1 + 2 * d - 4 * d * d) / (4 * q);
  p.beta = 2 * d * d / q;
  p.phi = Rational(1, 2) / q;
  p.psi = d / q;
  p.m = 4 * d * d / (q + 4 * d * d);
  p.above_root = 8 * d * d * d + 8 * d * d + d - 1 > 0;
  p.below_upper_gap = 4 * d * d + 2 * d - 1 <= 0;
  p.above_lower_gap = 4 * d * d - 6 * d + 1 <= 0;
  return p;
}

IntervalSet kurka_sn(const Rational& delta, int n) {
  if (n < 1) throw std::invalid_argument("kurka_sn: N must be positive");
  KurkaParams p = kurka_params(delta);
  const Rational k1 = 0, l1 = p.phi;
  const Rational k2 = p.phi + p.psi, l2 = k2 + p.alpha;
  const Rational k3 = l2 + p.beta, l3 = k3 + p.alpha;
  std::vector<Interval> pieces;
  for (int i = 0; i < n; ++i) {
    Rational base = i;
    pieces.push_back({base + k1, base + l1});
    pieces.push_back({base + k2, base + l2});
    pieces.push_back({base + k3, base + l3});
  }
  pieces.push_back({Rational(n) + k1, Rational(n) + l1});
  return IntervalSet::normalize(std::move(pieces));
}

Rational kurka_un_scale(const KurkaParams& p, int n) {
  return (1 - p.m) / (Rational(n) + p.phi);
}

Configuration kurka_cn(const Rational& delta, int n) {
  KurkaParams p = kurka_params(delta);
  IntervalSet body = affine(kurka_sn(delta, n), kurka_un_scale(p, n), p.m);
  return Configuration(std::move(body));
}

Rational kurka_cn_body_measure(const Rational& delta, int n) {
  KurkaParams p = kurka_params(delta);
  Rational sn_measure = Rational(n) * (p.phi + 2 * p.alpha) + p.phi;
  return kurka_un_scale(p, n) * sn_measure;
}

VerificationReport verify_claim_radii(const Rational& delta, int n) {
  KurkaParams p = kurka_params(delta);
  VerificationReport report;
  report.subject = "claim radii, delta = " + to_string(delta) + ", N = " + std::to_string(n);

  IntervalSet sn = kurka_sn(delta, n);
  LineSet line = LineSet::from_intervals(sn);
  const Rational top = Rational(n) + p.phi;
  const Rational one_minus_delta = 1 - delta;
  const Rational l1 = p.phi;
  const Rational k2 = p.phi + p.psi, l2 = k2 + p.alpha;
  const Rational k3 = l2 + p.beta, l3 = k3 + p.alpha;

  for (const auto& e : sn.endpoints()) {
    if (!(e > 0 && e < top)) continue;
    Rational frac = e - Rational(rat_floor(e));
    Rational radius;
    std::string label;
    bool exact;  // density equals 1 - delta exactly (cases I and III)
    if (frac == 0 || frac == l1) {
      label = "case I";
      radius = p.phi;
      exact = true;
    } else if (frac == l2 || frac == k3) {
      label = "case II";
      radius = p.alpha;
      exact = false;
    } else if (frac == k2 || frac == l3) {
      label = "case III";
      radius = p.psi + p.phi;
      exact = true;
    } else {
      report.violation_at("classification", e, "endpoint matches no case");
      continue;
    }
    Rational density = density_at(line, e, radius);
    bool ok = exact ? density == one_minus_delta : density >= one_minus_delta;
    Finding f;
    f.label = label;
    f.endpoint = e;
    f.omega = radius;
    f.side = Side::B;
    f.violation = !ok;
    f.detail = "density " + to_string(density);
    report.add(std::move(f));
  }

  // boundary radii on C_N
  Configuration cn = kurka_cn(delta, n);
  LineSet cline = LineSet::from_configuration(cn);
  Rational d_m = density_at(cline, p.m, 1 - p.m);
  Rational d_0 = density_at(cline, Rational(0), 1 - p.m);
  Rational d_1 = density_at(cline, Rational(1), Rational(1));
  report.condition("boundary m", d_m >= one_minus_delta,
                   "density " + to_string(d_m) + " at radius 1-m");
  report.condition("boundary 0", d_0 >= one_minus_delta,
                   "density " + to_string(d_0) + " at radius 1-m");
  report.condition("boundary 1", d_1 <= delta,
                   "density " + to_string(d_1) + " at radius 1");
  return report;
}

std::optional<int> minimal_counterexample_n(const Rational& delta, int n_max) {
  if (n_max < 1) throw std::invalid_argument("minimal_counterexample_n: n_max >= 1");
  const Rational threshold = 2 * delta;
  for (int n = 1; n <= n_max; ++n) {
    if (kurka_cn_body_measure(delta, n) > threshold) continue;
    if (is_counterexample(kurka_cn(delta, n), delta).passed) return n;
  }
  return std::nullopt;
}

namespace {

Configuration build_uniform_family(const Rational& m, int k, const Rational& fill,
                                   const Rational& gap) {
  if (!(m > 0 && m < 1)) throw std::invalid_argument("uniform family: m must be in (0,1)");
  if (k < 1) throw std::invalid_argument("uniform family: k must be >= 1");
  if (!(fill > 0 && fill < 1))
    throw std::invalid_argument("uniform family: fill must be in (0,1)");
  if (!(gap >= 0 && gap < 1))
    throw std::invalid_argument("uniform family: gap must be in [0,1)");
  const Rational span = 1 - m;
  const Rational len = fill * span / k;
  const Rational lead = (1 - fill) * span / k;  // gap before each interval
  std::vector<Interval> pieces;
  for (int i = 0; i < k; ++i) {
    Rational start = m + (i + 1) * lead + Rational(i) * len;
    Rational end = start + len;
    if (gap == 0) {
      pieces.push_back({start, end});
    } else {
      Rational half = len * (1 - gap) / 2;
      pieces.push_back({start, start + half});
      pieces.push_back({end - half, end});
    }
  }
  if (pieces.back().right != 1)
    throw std::logic_error("uniform family: layout must end at 1");
  return Configuration(IntervalSet::normalize(std::move(pieces)));
}

}  // namespace

Configuration szenes_config(const Rational& m, int k, const Rational& fill) {
  return build_uniform_family(m, k, fill, Rational(0));
}

Configuration cgo_config(const Rational& m, int k, const Rational& fill,
                         const Rational& gap) {
  return build_uniform_family(m, k, fill, gap);
}

PeriodicSet good_set_example(const Rational& delta) {
  KurkaParams p = kurka_params(delta);
  Rational h = p.phi / 2;
  std::vector<Interval> pieces{
      {Rational(0), h},
      {h + p.psi, h + p.psi + p.alpha},
      {1 - h - p.psi - p.alpha, 1 - h - p.psi},
      {1 - h, Rational(1)},
  };
  return PeriodicSet(IntervalSet::normalize(std::move(pieces)));
}

}  // namespace densitylab
