#include <doctest.h>

#include <random>

#include "densitylab/constructions.hpp"
#include "densitylab/zeta.hpp"

using namespace densitylab;

namespace {
Rational rat(long long n, long long d = 1) { return Rational(n, d); }
}  // namespace

TEST_CASE("parameters at delta = 27/100") {
  KurkaParams p = kurka_params(rat(27, 100));
  CHECK(p.phi == rat(50, 181));
  CHECK(p.psi == rat(27, 181));
  CHECK(p.alpha == rat(3121, 18100));
  CHECK(p.beta == rat(729, 9050));
  CHECK(p.m == rat(729, 5254));
  CHECK(p.valid());
}

TEST_CASE("parameter identities on random deltas in the validity window") {
  std::mt19937_64 rng(424242);
  std::uniform_int_distribution<long long> numer(269000, 308000);
  int checked = 0;
  for (int trial = 0; trial < 200 && checked < 100; ++trial) {
    Rational d(numer(rng), 1000000);
    KurkaParams p = kurka_params(d);
    if (!p.valid()) continue;
    ++checked;
    // the period closes up exactly
    CHECK(p.phi + p.psi + p.alpha + p.beta + p.alpha + p.psi == 1);
    CHECK(p.phi + 2 * p.psi + 2 * p.alpha + p.beta == 1);
    CHECK(p.phi + 2 * p.alpha == (1 - d) * (1 + 2 * d) / (1 + 3 * d));
    CHECK(p.alpha > 0);
    // the threshold inequality is equivalent to the cubic being positive
    bool in00 = (1 - d) * (1 + 2 * d) / (1 + 3 * d + 4 * d * d) < 2 * d;
    bool cubic = 8 * d * d * d + 8 * d * d + d > 1;
    CHECK(in00 == cubic);
    // window conditions exactly as used in the endpoint cases
    if (4 * d * d + 2 * d - 1 <= 0) CHECK(p.beta / (2 * p.alpha) <= d);
    if (4 * d * d - 6 * d + 1 <= 0) {
      CHECK(p.psi <= p.phi);
      CHECK(p.phi <= p.psi + p.alpha);
    }
  }
  CHECK(checked == 100);
}

TEST_CASE("S_N shape and measure") {
  const Rational delta = rat(27, 100);
  KurkaParams p = kurka_params(delta);

  IntervalSet s1 = kurka_sn(delta, 1);
  CHECK(s1.size() == 4);
  CHECK(s1.total_measure() == rat(11242, 18100) + rat(5000, 18100));

  IntervalSet s3 = kurka_sn(delta, 3);
  CHECK(s3.size() == 10);
  CHECK(s3.intervals().front().left == 0);
  CHECK(s3.intervals().back().right == Rational(3) + p.phi);
  CHECK(s3.total_measure() == Rational(3) * (p.phi + 2 * p.alpha) + p.phi);

  // endpoint table: k2 = phi + psi, l2 = phi + psi + alpha
  CHECK(s3.intervals()[1].left == p.phi + p.psi);
  CHECK(s3.intervals()[1].right == p.phi + p.psi + p.alpha);
}

TEST_CASE("C_N endpoints and measure bound") {
  const Rational delta = rat(27, 100);
  KurkaParams p = kurka_params(delta);
  for (int n : {1, 3, 10}) {
    Configuration cn = kurka_cn(delta, n);
    CHECK(cn.body().intervals().front().left == p.m);
    CHECK(cn.body().intervals().back().right == 1);
    Rational measure = cn.body().total_measure();
    CHECK(measure == kurka_cn_body_measure(delta, n));
    CHECK(measure >= (1 - delta) * (1 + 2 * delta) / (1 + 3 * delta + 4 * delta * delta));
  }
}

TEST_CASE("claim radii verify exactly") {
  VerificationReport report = verify_claim_radii(rat(27, 100), 18);
  CHECK(report.passed);
  int case_i = 0, case_ii = 0, case_iii = 0;
  for (const auto& f : report.findings) {
    if (f.label == "case I") ++case_i;
    if (f.label == "case II") ++case_ii;
    if (f.label == "case III") ++case_iii;
  }
  // interior endpoints: 6 per full period plus the two around the final
  // interval, minus the two boundary points 0 and N+phi
  CHECK(case_i + case_ii + case_iii == 6 * 18 + 2 - 2);
  CHECK(case_ii == 2 * 18);

  // below the measure threshold the boundary check at 1 must fail
  VerificationReport small = verify_claim_radii(rat(27, 100), 3);
  bool boundary_failed = false;
  for (const auto& f : small.findings)
    if (f.label == "boundary 1" && f.violation) boundary_failed = true;
  CHECK(boundary_failed);
}

TEST_CASE("minimal counterexample N at 27/100") {
  const Rational delta = rat(27, 100);
  // the measure threshold first holds at N = 18
  CHECK(kurka_cn_body_measure(delta, 17) > 2 * delta);
  CHECK(kurka_cn_body_measure(delta, 18) <= 2 * delta);
  auto n = minimal_counterexample_n(delta, 100);
  REQUIRE(n.has_value());
  CHECK(*n == 18);  // frozen regression value, computed by this tool
}

TEST_CASE("minimal counterexample below the root never appears") {
  auto none = minimal_counterexample_n(rat(265, 1000), 200);
  CHECK_FALSE(none.has_value());
}

TEST_CASE("minimal N is nonincreasing in delta") {
  std::optional<int> prev;
  for (const auto& d : {rat(270, 1000), rat(28, 100), rat(30, 100)}) {
    auto n = minimal_counterexample_n(d, 100);
    REQUIRE(n.has_value());
    if (prev) CHECK(*n <= *prev);
    prev = n;
  }
}

TEST_CASE("uniform families") {
  Configuration szenes = szenes_config(rat(1, 3), 4, rat(1, 2));
  CHECK(szenes.body().size() == 4);
  CHECK(szenes.body().intervals().back().right == 1);
  for (const auto& iv : szenes.body().intervals()) {
    CHECK(iv.left > rat(1, 3));
    CHECK(iv.length() == rat(1, 2) * rat(2, 3) / 4);
  }

  // gap = 0 degenerates to the plain family
  Configuration cgo0 = cgo_config(rat(1, 3), 4, rat(1, 2), rat(0));
  REQUIRE(cgo0.body().size() == szenes.body().size());
  for (std::size_t i = 0; i < cgo0.body().size(); ++i) {
    CHECK(cgo0.body().intervals()[i].left == szenes.body().intervals()[i].left);
    CHECK(cgo0.body().intervals()[i].right == szenes.body().intervals()[i].right);
  }

  Configuration cgo = cgo_config(rat(1, 3), 4, rat(1, 2), rat(1, 5));
  CHECK(cgo.body().size() == 8);
  CHECK(cgo.body().intervals().back().right == 1);

  CHECK_THROWS_AS(szenes_config(rat(3, 2), 4, rat(1, 2)), std::invalid_argument);
  CHECK_THROWS_AS(szenes_config(rat(1, 3), 0, rat(1, 2)), std::invalid_argument);
  CHECK_THROWS_AS(cgo_config(rat(1, 3), 4, rat(1, 2), rat(1)), std::invalid_argument);
}

TEST_CASE("good set example") {
  const Rational delta = rat(27, 100);
  PeriodicSet g = good_set_example(delta);
  CHECK(g.measure() == rat(5621, 9050));
  CHECK(g.measure() == (1 - delta) * (1 + 2 * delta) / (1 + 3 * delta));
  CHECK(g.measure() <= 4 * delta * delta / (1 - 2 * delta));
  CHECK(g.mirror_symmetric());
  CHECK(g.generator().size() == 4);
}
