#include "densitylab/periodic.hpp"

#include <algorithm>
#include <stdexcept>

namespace densitylab {

Rational periodic_measure(const PeriodicSet& p, const Rational& x, const Rational& y) {
  return p.measure_within(x, y);
}

TailCertificate tail_certificate(const LineSet& s, const Rational& c,
                                 const Rational& delta) {
  auto zone_density = [&](LineSet::Zone z) -> Rational {
    switch (z) {
      case LineSet::Zone::empty: return 0;
      case LineSet::Zone::solid: return 1;
      case LineSet::Zone::periodic: return s.period()->measure();
    }
    return 0;
  };
  Rational d_left = zone_density(s.left_zone());
  Rational d_right = zone_density(s.right_zone());

  TailCertificate cert;
  cert.limit = (d_left + d_right) / 2;

  int periodic_zones = (s.left_zone() == LineSet::Zone::periodic ? 1 : 0) +
                       (s.right_zone() == LineSet::Zone::periodic ? 1 : 0);
  Rational omega0, spread;
  if (periodic_zones == 2 && s.middle().empty()) {
    // pure periodization: |density - lambda G| <= M / omega for every
    // center, independent of the anchor
    omega0 = 1;
    spread = 2 * s.period()->envelope();
  } else {
    Rational envelope = 0;
    if (periodic_zones > 0)
      envelope = Rational(2 * periodic_zones) * s.period()->envelope();
    omega0 = rat_max(rat_abs(c - s.left_edge()), rat_abs(c - s.right_edge())) + 1;
    Rational k = s.measure_within(c - omega0, c + omega0) - (d_left + d_right) * omega0;
    spread = rat_abs(k) + envelope;
  }

  const Rational low = delta, high = 1 - delta;
  if (cert.limit > low && cert.limit < high) {
    cert.kind = TailCertificate::Kind::inside;
    Rational gap = rat_min(cert.limit - low, high - cert.limit);
    cert.w = rat_max(omega0, spread / (2 * gap));
  } else if (cert.limit > high) {
    cert.kind = TailCertificate::Kind::outside_high;
    cert.w = rat_max(omega0, spread / (2 * (cert.limit - high)));
  } else if (cert.limit < low) {
    cert.kind = TailCertificate::Kind::outside_low;
    cert.w = rat_max(omega0, spread / (2 * (low - cert.limit)));
  } else {
    cert.kind = TailCertificate::Kind::undecidable;
    cert.w = omega0;
  }
  return cert;
}

PeriodicProfile periodic_density_profile(const PeriodicSet& p, const Rational& c,
                                         const Rational& delta) {
  auto shared = std::make_shared<const PeriodicSet>(p);
  LineSet line = LineSet::periodized(shared);
  TailCertificate cert = tail_certificate(line, c, delta);
  return {density_profile_capped(line, c, cert.w), cert};
}

namespace {

// Three-valued endpoint qualification for condition (ii): does the density
// at center c stay strictly inside (delta, 1-delta) for every radius?
enum class Stays { yes, no, unknown };

Stays stays_inside_all_radii(const LineSet& s, const Rational& c, const Rational& delta) {
  TailCertificate cert = tail_certificate(s, c, delta);
  if (cert.kind == TailCertificate::Kind::outside_high ||
      cert.kind == TailCertificate::Kind::outside_low)
    return Stays::no;
  DensityProfile prof = density_profile_capped(s, c, cert.w);
  if (!stays_inside(prof, delta)) return Stays::no;
  return cert.kind == TailCertificate::Kind::inside ? Stays::yes : Stays::unknown;
}

std::string cert_note(const TailCertificate& cert) {
  switch (cert.kind) {
    case TailCertificate::Kind::inside:
      return "tail inside beyond W = " + to_string(cert.w);
    case TailCertificate::Kind::outside_high:
      return "tail >= 1-delta beyond W = " + to_string(cert.w);
    case TailCertificate::Kind::outside_low:
      return "tail <= delta beyond W = " + to_string(cert.w);
    case TailCertificate::Kind::undecidable:
      return "tail undecidable (limit on a band threshold)";
  }
  return {};
}

}  // namespace

VerificationReport check_good_i(const PeriodicSet& p, const Rational& delta) {
  VerificationReport report;
  report.subject = "good-set condition (i), delta = " + to_string(delta);
  auto shared = std::make_shared<const PeriodicSet>(p);
  LineSet line = LineSet::periodized(shared);
  for (const auto& e : p.endpoints_mod1()) {
    TailCertificate cert = tail_certificate(line, e, delta);
    if (cert.kind == TailCertificate::Kind::undecidable) {
      DensityProfile prof = density_profile_capped(line, e, cert.w);
      auto bad = any_bad_radius(prof, delta);
      if (bad) {
        report.witness("endpoint", e, bad->omega, bad->side);
      } else {
        report.violation_at("endpoint", e, cert_note(cert));
      }
      continue;
    }
    if (cert.kind != TailCertificate::Kind::inside) {
      // the tail itself is a witness
      Rational omega = cert.w + 1;
      Side side = cert.kind == TailCertificate::Kind::outside_high ? Side::B : Side::W;
      report.witness("endpoint", e, omega, side, cert_note(cert));
      continue;
    }
    DensityProfile prof = density_profile_capped(line, e, cert.w);
    auto bad = any_bad_radius(prof, delta);
    if (bad) {
      report.witness("endpoint", e, bad->omega, bad->side);
    } else {
      report.violation_at("endpoint", e,
                          "density stays inside the band for all radii; " + cert_note(cert));
    }
  }
  return report;
}

std::vector<Cut> default_cut_grid(const PeriodicSet& p, int periods) {
  std::vector<Rational> points;
  const Rational offsets[] = {Rational(0), Rational(1, 7), Rational(1, 3)};
  for (int k = 0; k < periods; ++k)
    for (const auto& e : p.endpoints_mod1())
      for (const auto& off : offsets) points.push_back(e + off + k);
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  std::vector<Cut> cuts;
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      cuts.push_back({points[i], points[j]});
  return cuts;
}

VerificationReport check_good_ii_bounded(const PeriodicSet& p, const Rational& delta,
                                         const std::vector<Cut>& cuts) {
  VerificationReport report;
  report.subject = "good-set condition (ii), delta = " + to_string(delta);
  auto shared = std::make_shared<const PeriodicSet>(p);

  // Far-field pruning radius: endpoints farther than this from the cut
  // region inherit a witness radius from H itself, hence cannot qualify.
  std::optional<Rational> prune;
  {
    LineSet hline = LineSet::periodized(shared);
    Rational r_star = 0;
    bool all = true;
    for (const auto& e : p.endpoints_mod1()) {
      TailCertificate cert = tail_certificate(hline, e, delta);
      DensityProfile prof = density_profile_capped(hline, e, cert.w);
      auto bad = any_bad_radius(prof, delta);
      if (!bad) { all = false; break; }
      r_star = rat_max(r_star, bad->omega);
    }
    if (all) prune = r_star + 1;
  }
  if (!prune)
    report.skip("pruning", "H itself fails condition (i); far endpoints unchecked");

  struct Shape {
    std::string name;
    LineSet set;
    Rational lo, hi;  // candidate window
  };

  for (const auto& cut : cuts) {
    std::vector<Shape> shapes;
    const Rational& b = cut.b;
    Rational window = prune ? *prune : Rational(3);
    if (cut.a) {
      const Rational& a = *cut.a;
      if (a >= b) throw std::invalid_argument("check_good_ii_bounded: cut needs a < b");
      shapes.push_back({"(-inf,a)uH\\[b,inf)", LineSet::halfline_cut(shared, a, b), a, b});
      shapes.push_back({"Hu(b,inf)\\(-inf,a]", LineSet::cut_to_halfline(shared, a, b), a, b});
      shapes.push_back({"H\\(-inf,a]", LineSet::cut_above(shared, a), a, a + window});
    }
    shapes.push_back({"H\\[b,inf)", LineSet::cut_below(shared, b), b - window, b});

    for (auto& shape : shapes) {
      std::vector<Rational> candidates =
          shape.set.boundary_points_in(shape.lo - 1, shape.hi + 1);
      bool qualified = false;
      bool unknown = false;
      Rational qualifier;
      for (const auto& c : candidates) {
        Stays verdict = stays_inside_all_radii(shape.set, c, delta);
        if (verdict == Stays::yes) {
          qualified = true;
          qualifier = c;
          break;
        }
        if (verdict == Stays::unknown) unknown = true;
      }
      std::string cut_desc = "cut (" + (cut.a ? to_string(*cut.a) : std::string("-inf")) +
                             ", " + to_string(b) + ") shape " + shape.name;
      if (qualified) {
        Finding f;
        f.label = "qualifying endpoint";
        f.endpoint = qualifier;
        f.detail = cut_desc;
        report.add(std::move(f));
      } else if (unknown || !prune) {
        report.skip("undecided", cut_desc);
      } else {
        report.violation_at("no qualifying endpoint", b, cut_desc);
      }
    }
  }
  return report;
}

namespace {

// Bound on the radius of any interval with density >= 1-delta when
// 1-delta exceeds lambda G; otherwise a heuristic window.
Rational upper_interval_radius_bound(const PeriodicSet& p, const Rational& delta) {
  Rational lg = p.measure();
  if (1 - delta > lg) {
    Rational bound = p.envelope() / (1 - delta - lg);
    return bound > 0 ? bound : Rational(1);
  }
  return 2 * p.envelope() + 2;
}

std::optional<WitnessInterval> upper_interval_search(const PeriodicSet& p,
                                                     const LineSet& line,
                                                     const Rational& s,
                                                     const Rational& delta,
                                                     Direction direction,
                                                     const Rational& reach) {
  std::vector<Rational> centers =
      direction == Direction::left ? p.endpoints_in(s - reach, s)
                                   : p.endpoints_in(s, s + reach);
  if (direction == Direction::left) std::reverse(centers.begin(), centers.end());
  for (const auto& a : centers) {
    DensityProfile prof = density_profile_capped(line, a, reach + 1);
    auto alpha = least_upper_crossing(prof, delta);
    if (!alpha) continue;
    // s must lie inside I_alpha(a)
    if (direction == Direction::left && !(s < a + *alpha)) continue;
    if (direction == Direction::right && !(s > a - *alpha)) continue;
    return WitnessInterval{a, *alpha, prof.density(*alpha)};
  }
  return std::nullopt;
}

}  // namespace

std::optional<WitnessInterval> find_upper_interval(const PeriodicSet& p,
                                                   const Rational& s,
                                                   const Rational& delta,
                                                   Direction direction) {
  auto shared = std::make_shared<const PeriodicSet>(p);
  LineSet line = LineSet::periodized(shared);
  if (line.contains(s))
    throw std::invalid_argument("find_upper_interval: s is interior to H");
  Rational reach = upper_interval_radius_bound(p, delta);
  auto found = upper_interval_search(p, line, s, delta, direction, reach);
  if (!found) found = upper_interval_search(p, line, s, delta, direction, 2 * reach);
  return found;
}

std::optional<WitnessInterval> find_between_interval(const PeriodicSet& p,
                                                     const Rational& p0,
                                                     const Rational& q0,
                                                     const Rational& delta) {
  if (p0 > q0) throw std::invalid_argument("find_between_interval: p <= q required");
  auto is_endpoint = [&](const Rational& x) {
    Rational frac = x - Rational(rat_floor(x));
    for (const auto& e : p.endpoints_mod1())
      if (e == frac) return true;
    return false;
  };
  if (!is_endpoint(p0) || !is_endpoint(q0))
    throw std::invalid_argument("find_between_interval: p and q must be endpoints of H");

  auto shared = std::make_shared<const PeriodicSet>(p);
  LineSet line = LineSet::periodized(shared);
  std::vector<Rational> centers = p.endpoints_in(p0, q0);
  for (const auto& a : centers) {
    TailCertificate cert = tail_certificate(line, a, delta);
    DensityProfile prof = density_profile_capped(line, a, cert.w);
    auto bad = least_bad_radius(prof, delta);
    if (!bad || bad->omega <= 0) continue;
    // smaller radii stay strictly inside by minimality; check the
    // disjunction: (>= 1-delta and p in I) or (<= delta and q in I)
    bool ok = bad->side == Side::B ? a - bad->omega < p0 : a + bad->omega > q0;
    if (p0 == q0) ok = true;  // center equals both; containment is trivial
    if (ok) return WitnessInterval{a, bad->omega, prof.density(bad->omega)};
  }
  return std::nullopt;
}

std::vector<Interval> cover_period(const PeriodicSet& p, const Rational& delta) {
  auto shared = std::make_shared<const PeriodicSet>(p);
  LineSet line = LineSet::periodized(shared);
  std::vector<Interval> cover;

  // complement gaps of H within [0, 1]
  const auto& gen = p.generator().intervals();
  for (std::size_t i = 0; i + 1 < gen.size(); ++i) {
    Rational x = gen[i].right, s = gen[i + 1].left;
    auto w = find_upper_interval(p, s, delta, Direction::left);
    if (!w)
      throw std::runtime_error("cover_period: no covering interval for gap ending at " +
                               to_string(s));
    if (!(w->center - w->radius < x))
      throw std::runtime_error("cover_period: returned interval misses the gap start " +
                               to_string(x));
    cover.push_back({w->center - w->radius, w->center + w->radius});
  }

  // intervals of H meeting [0, 1], with a density-preserving margin
  IntervalSet pieces = p.intervals_in(Rational(-1), Rational(2)).merge_closure();
  for (const auto& iv : pieces.intervals()) {
    if (iv.right < 0 || iv.left > 1) continue;
    Rational margin = iv.length() * delta / (2 * (1 - delta));
    cover.push_back({iv.left - margin, iv.right + margin});
  }

  // verify each interval and the coverage of [0, 1]
  for (const auto& iv : cover) {
    Rational density = line.measure_within(iv.left, iv.right) / iv.length();
    if (density < 1 - delta)
      throw std::runtime_error("cover_period: interval density below 1-delta");
  }
  std::vector<Interval> sorted = cover;
  std::sort(sorted.begin(), sorted.end(),
            [](const Interval& a, const Interval& b) { return a.left < b.left; });
  Rational reach = 0;
  bool started = false;
  for (const auto& iv : sorted) {
    if (!started) {
      if (iv.left < 0 && iv.right > 0) {
        reach = iv.right;
        started = true;
      }
      continue;
    }
    if (iv.left < reach) reach = rat_max(reach, iv.right);
    if (reach > 1) break;
  }
  if (!(started && reach > 1))
    throw std::runtime_error("cover_period: intervals do not cover [0, 1]");
  return cover;
}

}  // namespace densitylab
