#include "densitylab/verifier.hpp"

#include <stdexcept>

namespace densitylab {

VerificationReport is_counterexample(const Configuration& c, const Rational& delta) {
  if (!(delta > 0 && delta < Rational(1, 2)))
    throw std::invalid_argument("is_counterexample: delta must be in (0, 1/2)");
  VerificationReport report;
  report.subject = "counterexample check, delta = " + to_string(delta);
  LineSet line = LineSet::from_configuration(c);
  std::vector<Rational> boundaries = line.boundary_points();
  for (const auto& p : boundaries) {
    DensityProfile prof = density_profile_from_boundaries(line, p, boundaries);
    auto bad = any_bad_radius(prof, delta);
    if (bad) {
      report.witness("endpoint", p, bad->omega, bad->side,
                     "density " + to_string(prof.density(bad->omega)));
    } else {
      report.violation_at("endpoint", p,
                          "density stays inside (delta, 1-delta) for all radii");
    }
  }
  return report;
}

SzenesQuantities szenes_quantities(const Configuration& c, const Rational& delta) {
  if (!(delta > 0 && delta < Rational(1, 2)))
    throw std::invalid_argument("szenes_quantities: delta must be in (0, 1/2)");
  LineSet line = LineSet::from_configuration(c);
  std::vector<Rational> boundaries = line.boundary_points();

  SzenesQuantities q;
  for (const auto& p : boundaries) {
    DensityProfile prof = density_profile_from_boundaries(line, p, boundaries);
    auto bad = greatest_bad_radius(prof, delta);
    if (!bad)
      throw std::runtime_error("szenes_quantities: endpoint " + to_string(p) +
                               " has no bad radius");
    q.table.push_back({p, bad->omega, bad->side});
  }

  const Rational half(1, 2);
  bool have_vb = false, have_vw = false;
  for (const auto& row : q.table) {
    if (row.side == Side::B && row.endpoint <= half && row.omega >= row.endpoint) {
      if (!have_vb || row.endpoint > q.v_b) q.v_b = row.endpoint;
      have_vb = true;
    }
    if (row.side == Side::W && row.endpoint >= half &&
        row.omega >= 1 - row.endpoint) {
      if (!have_vw || row.endpoint < q.v_w) q.v_w = row.endpoint;
      have_vw = true;
    }
  }
  if (!have_vb)
    throw std::runtime_error(
        "szenes_quantities: the defining range of v_B is empty");
  if (!have_vw)
    throw std::runtime_error(
        "szenes_quantities: the defining range of v_W is empty");
  q.rho = c.measure_within(0, 1);
  return q;
}

namespace {

const Rational& need_scalar(const BundleObjects& obj, const std::string& name) {
  auto it = obj.scalars.find(name);
  if (it == obj.scalars.end())
    throw std::invalid_argument("bundle object missing scalar symbol '" + name + "'");
  return it->second;
}

const IntervalSet& need_set(const BundleObjects& obj, const std::string& name) {
  auto it = obj.sets.find(name);
  if (it == obj.sets.end())
    throw std::invalid_argument("bundle object missing set symbol '" + name + "'");
  return it->second;
}

bool is_endpoint_of(const IntervalSet& s, const Rational& x) {
  for (const auto& e : s.endpoints())
    if (e == x) return true;
  return false;
}

// Existential with a window: some radius omega <= wmax with density outside
// the band (so that I_omega(p) stays inside the stated window).
void check_windowed_witnesses(VerificationReport& report, const IntervalSet& set,
                              const Rational& window_lo, const Rational& window_hi,
                              const Rational& range_lo, const Rational& range_hi,
                              const Rational& delta, const std::string& label) {
  LineSet line = LineSet::from_intervals(set);
  for (const auto& p : set.endpoints()) {
    if (!(p > range_lo && p < range_hi)) continue;
    Rational wmax = rat_min(p - window_lo, window_hi - p);
    if (wmax <= 0) {
      report.violation_at(label, p, "no admissible radius keeps the window");
      continue;
    }
    DensityProfile prof = density_profile_capped(line, p, wmax);
    auto bad = any_bad_radius(prof, delta);
    if (bad) {
      report.witness(label, p, bad->omega, bad->side);
    } else {
      report.violation_at(label, p, "density stays inside the band for all radii <= " +
                                        to_string(wmax));
    }
  }
}

VerificationReport bundle_lemmaa(const BundleObjects& obj, const Rational& delta) {
  const IntervalSet& d = need_set(obj, "D");
  const Rational& a = need_scalar(obj, "a");
  const Rational& b = need_scalar(obj, "b");
  const Rational& budget = need_scalar(obj, "counterexample_intervals");

  VerificationReport report;
  report.subject = "lemmaa-abc";
  check_windowed_witnesses(report, d, 0, 1, a, b, delta, "(a)");
  report.condition("(b)", Rational(d.size()) < budget,
                   "interval count " + std::to_string(d.size()) + " vs budget " +
                       to_string(budget));
  Rational bound = 4 * delta * delta / (1 - 2 * delta) * (b - a);
  Rational ld = d.total_measure();
  Rational lcomp = 1 - d.measure_within(0, 1);
  report.condition("(c) measure", ld <= bound,
                   "lambda D = " + to_string(ld) + ", bound " + to_string(bound));
  report.condition("(c) complement", lcomp <= bound,
                   "lambda((0,1) \\ D) = " + to_string(lcomp) + ", bound " + to_string(bound));
  return report;
}

VerificationReport bundle_lemmab(const BundleObjects& obj, const Rational& delta) {
  const IntervalSet& d = need_set(obj, "D");
  const Rational& a = need_scalar(obj, "a");
  const Rational& b = need_scalar(obj, "b");
  const Rational& ap = need_scalar(obj, "a_prime");
  const Rational& bp = need_scalar(obj, "b_prime");
  const Rational& ea = need_scalar(obj, "eps_a");
  const Rational& eb = need_scalar(obj, "eps_b");
  const Rational& budget = need_scalar(obj, "counterexample_intervals");
  if (d.empty()) throw std::invalid_argument("lemmab bundle: empty set D");

  VerificationReport report;
  report.subject = "lemmab-i-vii";
  const Rational r1 = d.intervals().front().left;
  const Rational s1 = d.intervals().front().right;
  const Rational rn = d.intervals().back().left;
  const Rational sn = d.intervals().back().right;

  report.condition("(i)",
                   r1 <= a && a < b && b <= sn && is_endpoint_of(d, ap) &&
                       is_endpoint_of(d, bp) && a < ap && ap < b && a < bp && bp < b,
                   "ordering and endpoint membership");
  report.condition("(ii)", Rational(d.size()) < budget,
                   "interval count " + std::to_string(d.size()) + " vs budget " +
                       to_string(budget));
  check_windowed_witnesses(report, d, r1, sn, a, b, delta, "(iii)");
  report.condition("(iv)", ap - ea >= r1 && ap + ea <= sn && bp - eb >= r1 && bp + eb <= sn,
                   "witness intervals inside (r1, sn)");

  LineSet line = LineSet::from_intervals(d);
  DensityProfile prof_a = density_profile(line, ap);
  DensityProfile prof_b = density_profile(line, bp);
  report.condition("(v) a'", max_up_to(prof_a, ea, delta),
                   "density at eps_a = " + to_string(prof_a.density(ea)));
  report.condition("(v) b'", max_up_to(prof_b, eb, delta),
                   "density at eps_b = " + to_string(prof_b.density(eb)));
  report.condition("(vi)", ap - ea < s1 && ap + ea > r1 && bp - eb < sn && bp + eb > rn,
                   "witness intervals meet the outer component");
  Rational bound = 4 * delta * delta / (1 - 2 * delta) * (b - a);
  report.condition("(vii)", d.total_measure() <= bound,
                   "lambda D = " + to_string(d.total_measure()) + ", bound " +
                       to_string(bound));
  return report;
}

VerificationReport bundle_lemmabwlog(const BundleObjects& obj, const Rational& delta) {
  const Rational& a = need_scalar(obj, "a");
  const Rational& b = need_scalar(obj, "b");
  const Rational& ap = need_scalar(obj, "a_prime");
  const Rational& bp = need_scalar(obj, "b_prime");
  const Rational& ea = need_scalar(obj, "eps_a");
  const Rational& eb = need_scalar(obj, "eps_b");

  VerificationReport report;
  report.subject = "lemmabwlog-viii-ix";
  Rational factor = (4 * delta - 1) / (1 - 2 * delta);
  report.condition("(viii)", ap - a > factor * ea,
                   "a' - a = " + to_string(ap - a) + " vs " + to_string(factor * ea));
  report.condition("(ix)", b - bp > factor * eb,
                   "b - b' = " + to_string(b - bp) + " vs " + to_string(factor * eb));
  return report;
}

VerificationReport bundle_lemmad(const BundleObjects& obj, const Rational& delta) {
  const IntervalSet& f = need_set(obj, "F");
  const Rational& budget = need_scalar(obj, "counterexample_intervals");
  if (f.empty()) throw std::invalid_argument("lemmad bundle: empty set F");

  VerificationReport report;
  report.subject = "lemmad-I-IV";
  const Interval& first = f.intervals().front();
  const Interval& last = f.intervals().back();
  report.condition("(I)", (first.left + first.right) / 2 == 0 &&
                              (last.left + last.right) / 2 == 1,
                   "component centers at 0 and 1");
  report.condition("(II)", Rational(f.size()) < budget,
                   "interval count " + std::to_string(f.size()) + " vs budget " +
                       to_string(budget));
  check_windowed_witnesses(report, f, first.left, last.right, first.left, last.right,
                           delta, "(III)");
  Rational bound = 4 * delta * delta / (1 - 2 * delta);
  Rational measure01 = f.measure_within(0, 1);
  report.condition("(IV)", measure01 <= bound,
                   "lambda(F ^ [0,1]) = " + to_string(measure01) + ", bound " +
                       to_string(bound));
  return report;
}

}  // namespace

VerificationReport check_property_bundle(const std::string& bundle,
                                         const BundleObjects& objects,
                                         const Rational& delta) {
  if (bundle == "lemmaa-abc") return bundle_lemmaa(objects, delta);
  if (bundle == "lemmab-i-vii") return bundle_lemmab(objects, delta);
  if (bundle == "lemmabwlog-viii-ix") return bundle_lemmabwlog(objects, delta);
  if (bundle == "lemmad-I-IV") return bundle_lemmad(objects, delta);
  throw std::invalid_argument("unknown bundle '" + bundle + "'");
}

}  // namespace densitylab
