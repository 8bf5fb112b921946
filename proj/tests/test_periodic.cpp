#include <doctest.h>

#include <random>

#include "densitylab/constructions.hpp"
#include "densitylab/periodic.hpp"

using namespace densitylab;

namespace {
Rational rat(long long n, long long d = 1) { return Rational(n, d); }

PeriodicSet quarter_set() {
  // G = [0, 1/4) u (3/4, 1], lambda G = 1/2
  return PeriodicSet(IntervalSet::normalize({{rat(0), rat(1, 4)}, {rat(3, 4), rat(1)}}));
}
}  // namespace

TEST_CASE("periodic measure") {
  PeriodicSet p = quarter_set();
  CHECK(p.measure() == rat(1, 2));
  CHECK(periodic_measure(p, rat(0), rat(2)) == 1);
  CHECK(periodic_measure(p, rat(-7, 2), rat(-1, 2)) == rat(3, 2));
  // whole periods from any anchor
  for (const auto& z : {rat(-3), rat(0), rat(5)})
    CHECK(periodic_measure(p, z, z + 3) == 3 * p.measure());
  CHECK(periodic_measure(good_set_example(rat(27, 100)), rat(0), rat(1)) == rat(5621, 9050));

  // additivity on random windows
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<long long> num(-80, 80);
  for (int trial = 0; trial < 300; ++trial) {
    Rational x(num(rng), 8), y(num(rng), 8), z(num(rng), 8);
    std::vector<Rational> w{x, y, z};
    std::sort(w.begin(), w.end());
    CHECK(periodic_measure(p, w[0], w[1]) + periodic_measure(p, w[1], w[2]) ==
          periodic_measure(p, w[0], w[2]));
  }
}

TEST_CASE("generator validation") {
  CHECK_THROWS_AS(PeriodicSet(IntervalSet::normalize({{rat(0), rat(1)}})),
                  std::invalid_argument);
  CHECK_THROWS_AS(PeriodicSet(IntervalSet::normalize({{rat(1, 4), rat(1, 2)}})),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      PeriodicSet(IntervalSet::normalize({{rat(0), rat(1, 2)}, {rat(1, 2), rat(1)}})),
      std::invalid_argument);
}

TEST_CASE("envelope bounds the density deviation") {
  std::mt19937_64 rng(1234);
  PeriodicSet sets[] = {quarter_set(), good_set_example(rat(27, 100)),
                        good_set_example(rat(29, 100))};
  std::uniform_int_distribution<long long> num(-50, 50);
  std::uniform_int_distribution<long long> den(1, 9);
  for (const auto& p : sets) {
    auto shared = std::make_shared<const PeriodicSet>(p);
    LineSet line = LineSet::periodized(shared);
    for (int trial = 0; trial < 350; ++trial) {
      Rational c(num(rng), den(rng));
      Rational omega = rat_abs(Rational(num(rng), den(rng))) + rat(1, 13);
      Rational d = density_at(line, c, omega);
      CHECK(rat_abs(d - p.measure()) * omega <= p.envelope());
    }
  }
}

TEST_CASE("periodic profile with tail certificate") {
  const Rational delta = rat(27, 100);
  PeriodicSet g = good_set_example(delta);
  // lambda G ~ 0.621 lies inside (0.27, 0.73): the tail is certified inside
  PeriodicProfile pp = periodic_density_profile(g, g.endpoints_mod1().front(), delta);
  CHECK(pp.tail.kind == TailCertificate::Kind::inside);
  CHECK(pp.tail.limit == g.measure());
  CHECK(pp.profile.capped);
  CHECK(pp.profile.cap == pp.tail.w);

  // integer shifts leave the profile unchanged
  PeriodicProfile shifted =
      periodic_density_profile(g, g.endpoints_mod1().front() + 5, delta);
  REQUIRE(shifted.profile.breakpoints.size() == pp.profile.breakpoints.size());
  for (std::size_t i = 0; i < pp.profile.breakpoints.size(); ++i)
    CHECK(shifted.profile.breakpoints[i] == pp.profile.breakpoints[i]);
  for (std::size_t i = 0; i < pp.profile.pieces.size(); ++i) {
    CHECK(shifted.profile.pieces[i].a == pp.profile.pieces[i].a);
    CHECK(shifted.profile.pieces[i].b == pp.profile.pieces[i].b);
  }
}

TEST_CASE("tail certificate is undecidable when the limit hits the band edge") {
  PeriodicSet p = quarter_set();  // lambda G = 1/2
  auto shared = std::make_shared<const PeriodicSet>(p);
  LineSet line = LineSet::periodized(shared);
  TailCertificate inside = tail_certificate(line, rat(1, 4), rat(1, 4));
  CHECK(inside.kind == TailCertificate::Kind::inside);  // 1/2 in (1/4, 3/4)

  // H \ [b, inf) has density limit lambda G / 2 = 1/4: exactly delta
  LineSet cut = LineSet::cut_below(shared, rat(3));
  TailCertificate edge = tail_certificate(cut, rat(1), rat(1, 4));
  CHECK(edge.kind == TailCertificate::Kind::undecidable);
  // a wider band decides it downward
  TailCertificate low = tail_certificate(cut, rat(1), rat(26, 100));
  CHECK(low.kind == TailCertificate::Kind::outside_low);
  // beyond W the density is certified at or below delta
  Rational far = low.w + 3;
  CHECK(density_at(cut, rat(1), far) <= rat(26, 100));
}

TEST_CASE("condition (i) on the optimal example") {
  const Rational delta = rat(27, 100);
  PeriodicSet g = good_set_example(delta);
  VerificationReport report = check_good_i(g, delta);
  CHECK(report.passed);
  REQUIRE(report.findings.size() == g.endpoints_mod1().size());

  // witnesses re-verify through direct density
  KurkaParams p = kurka_params(delta);
  auto shared = std::make_shared<const PeriodicSet>(g);
  LineSet line = LineSet::periodized(shared);
  for (const auto& f : report.findings) {
    REQUIRE(f.omega.has_value());
    Rational d = density_at(line, *f.endpoint, *f.omega);
    CHECK((d <= delta || d >= 1 - delta));
  }

  // the construction radii (phi, alpha, psi+phi), shifted by -phi/2, stay
  // valid witnesses at their endpoint types
  const auto& eps = g.endpoints_mod1();
  CHECK(density_at(line, eps[0], p.phi) == 1 - delta);            // case I type
  CHECK(density_at(line, eps[1], p.psi + p.phi) == 1 - delta);    // case III type
  CHECK(density_at(line, eps[2], p.alpha) >= 1 - delta);          // case II type
  CHECK(density_at(line, eps[5], p.phi) == 1 - delta);
}

TEST_CASE("condition (i) across the delta window") {
  for (const auto& d : {rat(2695, 10000), rat(275, 1000), rat(285, 1000), rat(30, 100)}) {
    PeriodicSet g = good_set_example(d);
    CHECK(check_good_i(g, d).passed);
  }
}

TEST_CASE("condition (ii) finds no violation on a small grid") {
  const Rational delta = rat(27, 100);
  PeriodicSet g = good_set_example(delta);
  std::vector<Cut> cuts;
  // a handful of structured cuts, including a -inf marker
  const auto& eps = g.endpoints_mod1();
  cuts.push_back({eps[0], eps[0] + 1});
  cuts.push_back({eps[1], eps[3] + 1});
  cuts.push_back({eps[0] + rat(1, 7), eps[2] + 2});
  cuts.push_back({std::nullopt, eps[2]});
  VerificationReport report = check_good_ii_bounded(g, delta, cuts);
  CHECK(report.passed);

  // mirrored cuts give mirrored verdicts under the G = 1 - G symmetry
  REQUIRE(g.mirror_symmetric());
  std::vector<Cut> mirrored;
  for (const auto& cut : cuts) {
    if (!cut.a) continue;
    mirrored.push_back({1 - cut.b, 1 - *cut.a});
  }
  CHECK(check_good_ii_bounded(g, delta, mirrored).passed);
}

TEST_CASE("a cut strictly inside one interval of H keeps its endpoints inside the band") {
  const Rational delta = rat(27, 100);
  PeriodicSet g = good_set_example(delta);
  // (a, b) inside the interval of H around 0, shorter than the smallest gap
  Rational nu1 = g.endpoints_mod1().front();
  std::vector<Cut> cuts{{-nu1 / 3, nu1 / 3}};
  VerificationReport report = check_good_ii_bounded(g, delta, cuts);
  CHECK(report.passed);
}

TEST_CASE("a non-symmetric generator runs all four cut shapes") {
  // good-set-like but deliberately lopsided
  PeriodicSet g(IntervalSet::normalize(
      {{rat(0), rat(1, 5)}, {rat(2, 5), rat(1, 2)}, {rat(4, 5), rat(1)}}));
  CHECK_FALSE(g.mirror_symmetric());
  std::vector<Cut> cuts{{rat(1, 5), rat(6, 5)}, {rat(1, 2), rat(2)}};
  VerificationReport report = check_good_ii_bounded(g, rat(27, 100), cuts);
  // one finding per cut and shape: 2 cuts x 4 shapes
  CHECK(report.findings.size() == 8);
}

TEST_CASE("find_upper_interval") {
  const Rational delta = rat(27, 100);
  PeriodicSet g = good_set_example(delta);
  auto shared = std::make_shared<const PeriodicSet>(g);
  LineSet line = LineSet::periodized(shared);

  Rational s = g.endpoints_mod1().front();  // nu1, not interior
  auto w = find_upper_interval(g, s, delta, Direction::left);
  REQUIRE(w.has_value());
  CHECK(w->center <= s);
  CHECK(s < w->center + w->radius);
  CHECK(w->density >= rat(73, 100));
  DensityProfile prof = density_profile_capped(line, w->center, w->radius + 1);
  CHECK(triangle_check(prof, w->radius, delta));

  // interior points are rejected
  CHECK_THROWS_AS(find_upper_interval(g, rat(0), delta, Direction::left),
                  std::invalid_argument);

  // reflected query gives the reflected answer under G = 1 - G
  auto wr = find_upper_interval(g, 1 - s, delta, Direction::right);
  REQUIRE(wr.has_value());
  CHECK(wr->center == 1 - w->center);
  CHECK(wr->radius == w->radius);
}

TEST_CASE("find_between_interval") {
  const Rational delta = rat(27, 100);
  PeriodicSet g = good_set_example(delta);
  auto shared = std::make_shared<const PeriodicSet>(g);
  LineSet line = LineSet::periodized(shared);
  const auto& eps = g.endpoints_mod1();

  // p = q: the minimal bad radius at that endpoint
  auto w0 = find_between_interval(g, eps[0], eps[0], delta);
  REQUIRE(w0.has_value());
  CHECK(w0->center == eps[0]);
  DensityProfile prof = density_profile_capped(line, eps[0], w0->radius + 1);
  for (int k = 1; k <= 5; ++k) {
    Rational smaller = w0->radius * rat(k, 6);
    Rational d = prof.density(smaller);
    CHECK(d > delta);
    CHECK(d < 1 - delta);
  }

  // adjacent endpoints across a gap
  auto w1 = find_between_interval(g, eps[0], eps[1], delta);
  REQUIRE(w1.has_value());
  CHECK(w1->center >= eps[0]);
  CHECK(w1->center <= eps[1]);
  bool disjunct = (w1->density >= 1 - delta && w1->center - w1->radius < eps[0]) ||
                  (w1->density <= delta && w1->center + w1->radius > eps[1]);
  CHECK(disjunct);

  CHECK_THROWS_AS(find_between_interval(g, rat(1, 1000), eps[1], delta),
                  std::invalid_argument);
}

TEST_CASE("cover_period") {
  const Rational delta = rat(27, 100);
  PeriodicSet g = good_set_example(delta);
  auto shared = std::make_shared<const PeriodicSet>(g);
  LineSet line = LineSet::periodized(shared);

  std::vector<Interval> cover = cover_period(g, delta);
  CHECK(cover.size() <= 2 * g.endpoints_mod1().size());
  for (const auto& iv : cover) {
    Rational density = line.measure_within(iv.left, iv.right) / iv.length();
    CHECK(density >= rat(73, 100));
  }
  // exact sweep over [0, 1]
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
  }
  CHECK(started);
  CHECK(reach > 1);
}
