#include <CLI11.hpp>

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <thread>

#include "densitylab/bounds.hpp"
#include "densitylab/constructions.hpp"
#include "densitylab/json_io.hpp"
#include "densitylab/periodic.hpp"
#include "densitylab/zeta.hpp"

using namespace densitylab;

namespace {

Rational default_tolerance() {
  if (const char* env = std::getenv("DENSITYLAB_TOL")) return parse_rational(env);
  return rat_pow10_neg(12);
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_file(out_path, text);
  }
}

int cmd_roots(const Rational& tol) {
  auto row = [](const std::string& name, const Rational& r, const IntPolynomial& p) {
    std::string padded = name;
    padded.resize(12, ' ');
    std::cout << padded << to_decimal(r, 9) << "   " << p.to_string() << "\n";
  };
  std::cout << "name        root          polynomial\n";
  static const char* zeta_names[] = {"zeta1", "zeta2", "zeta3", "zeta4",
                                     "zeta5", "zeta6", "zeta7"};
  for (int i = 1; i <= 7; ++i) row(zeta_names[i - 1], zeta(i, tol), zeta_polynomial(i));
  static const char* prior_names[] = {"szenes-lo", "szenes-hi", "cgo-hi"};
  for (int i = 0; i < 3; ++i)
    row(prior_names[i], prior_bound_root(i, tol), prior_bound_polynomial(i));
  return 0;
}

int cmd_verify(const std::string& path, const Rational& delta, const std::string& out) {
  ParsedSet parsed;
  try {
    parsed = set_from_json(json::parse(read_file(path)));
    if (!parsed.halfline) {
      std::cerr << "verify: file does not describe a configuration (halfline=false)\n";
      return 2;
    }
  } catch (const std::exception& e) {
    std::cerr << "verify: " << e.what() << "\n";
    return 2;
  }
  VerificationReport report = is_counterexample(parsed.configuration(), delta);
  emit(report_to_json(report).dump(2) + "\n", out);
  return report.passed ? 0 : 1;
}

std::string profile_csv(const DensityProfile& prof, unsigned precision) {
  std::string csv = "omega,density,omega_exact,density_exact\n";
  auto row = [&](const Rational& omega) {
    Rational d = prof.density(omega);
    csv += to_decimal(omega, precision) + "," + to_decimal(d, precision) + "," +
           to_string(omega) + "," + to_string(d) + "\n";
  };
  for (std::size_t i = 0; i < prof.pieces.size(); ++i) {
    const ProfilePiece& piece = prof.pieces[i];
    Rational mid = piece.unbounded ? Rational(piece.lo + 1) : Rational((piece.lo + piece.hi) / 2);
    if (mid > 0) row(mid);
    if (!piece.unbounded && piece.hi > 0) row(piece.hi);
  }
  return csv;
}

int cmd_profile(const std::string& path, const Rational& point, const std::string& out,
                unsigned precision) {
  ParsedSet parsed = set_from_json(json::parse(read_file(path)));
  LineSet line = parsed.halfline ? LineSet::from_configuration(parsed.configuration())
                                 : LineSet::from_intervals(parsed.intervals);
  DensityProfile prof = density_profile(line, point);
  emit(profile_csv(prof, precision), out);
  return 0;
}

struct SweepRow {
  Rational delta;
  std::optional<int> minimal_n;
  long long runtime_ms = 0;
};

int cmd_sweep(const Rational& from, const Rational& to, int steps, int n_max, int jobs,
              const std::string& out, bool timings) {
  if (!(from < to) || steps < 1) {
    std::cerr << "sweep: need from < to and steps >= 1\n";
    return 2;
  }
  std::vector<Rational> deltas;
  Rational step = (to - from) / steps;
  for (int i = 0; i <= steps; ++i) deltas.push_back(from + step * i);

  std::vector<SweepRow> rows(deltas.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= deltas.size()) break;
      auto t0 = std::chrono::steady_clock::now();
      rows[i].delta = deltas[i];
      rows[i].minimal_n = minimal_counterexample_n(deltas[i], n_max);
      auto t1 = std::chrono::steady_clock::now();
      rows[i].runtime_ms =
          std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  // timings go to a separate column only on request: the default output is
  // byte-reproducible across runs
  std::string csv = timings ? "delta,minimal_n,verdict,runtime_ms\n"
                            : "delta,minimal_n,verdict\n";
  long long total_ms = 0;
  for (const auto& row : rows) {
    csv += to_string(row.delta) + ",";
    csv += row.minimal_n ? std::to_string(*row.minimal_n) : "";
    csv += row.minimal_n ? ",found" : ",not-found";
    if (timings) csv += "," + std::to_string(row.runtime_ms);
    csv += "\n";
    total_ms += row.runtime_ms;
  }
  emit(csv, out);
  std::cerr << "sweep: " << deltas.size() << " samples in " << total_ms << " ms\n";
  return 0;
}

int cmd_construct(const std::string& family, const Rational& delta, int n,
                  const Rational& m, int k, const Rational& fill, const Rational& gap,
                  const std::string& out) {
  IntervalSet body;
  if (family == "kurka") {
    body = kurka_cn(delta, n).body();
  } else if (family == "szenes") {
    body = szenes_config(m, k, fill).body();
  } else if (family == "cgo") {
    body = cgo_config(m, k, fill, gap).body();
  } else {
    std::cerr << "construct: unknown family '" << family << "'\n";
    return 2;
  }
  emit(set_to_json(body, true).dump(2) + "\n", out);
  return 0;
}

int cmd_goodset_verify(const std::string& path, bool example, const Rational& delta,
                       int periods, const std::string& out) {
  PeriodicSet p = example ? good_set_example(delta)
                          : goodset_from_json(json::parse(read_file(path)));
  VerificationReport ri = check_good_i(p, delta);
  VerificationReport rii = check_good_ii_bounded(p, delta, default_cut_grid(p, periods));
  json j;
  j["lambda_g"] = to_string(p.measure());
  j["condition_i"] = report_to_json(ri);
  j["condition_ii"] = report_to_json(rii);
  emit(j.dump(2) + "\n", out);
  std::cout << "lambda G = " << to_string(p.measure()) << "\n";
  std::cout << "condition (i): " << (ri.passed ? "passed" : "FAILED") << "\n";
  std::cout << "condition (ii) grid: " << (rii.passed ? "no violation found" : "VIOLATION")
            << "\n";
  return ri.passed && rii.passed ? 0 : 1;
}

int cmd_oracle(const std::string& path, const Rational& p, const Rational& q,
               const Rational& delta, std::optional<unsigned> seed,
               const std::string& out) {
  ParsedSet parsed = set_from_json(json::parse(read_file(path)));
  LemmaxyOutcome outcome = lemmaxy_oracle(parsed.intervals, p, q, delta, seed);
  json j = report_to_json(outcome.report);
  switch (outcome.status) {
    case LemmaxyOutcome::Status::hypotheses_unmet: j["status"] = "hypotheses-unmet"; break;
    case LemmaxyOutcome::Status::holds: j["status"] = "holds"; break;
    case LemmaxyOutcome::Status::violation: j["status"] = "violation"; break;
  }
  emit(j.dump(2) + "\n", out);
  return outcome.status == LemmaxyOutcome::Status::violation ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"densitylab: exact interval-configuration density toolkit"};
  app.require_subcommand(1);

  std::string tol_str, out, path, family, set_path;
  std::string delta_str = "27/100", point_str = "0", from_str, to_str;
  std::string m_str = "1/3", fill_str = "1/2", gap_str = "0", p_str = "0", q_str = "1";
  int n = 3, k = 4, steps = 10, n_max = 100, jobs = 1, periods = 3;
  unsigned precision = 12;
  bool example = false, timings = false;
  std::optional<unsigned> seed;

  auto* roots = app.add_subcommand("roots", "table constants and prior-work roots");
  roots->add_option("--tol", tol_str, "refinement tolerance (rational)");

  auto* construct = app.add_subcommand("construct", "generate a configuration file");
  construct->add_option("family", family, "kurka | szenes | cgo")->required();
  construct->add_option("--delta", delta_str, "parameter delta (rational)");
  construct->add_option("--n", n, "number of periods N");
  construct->add_option("--m", m_str, "left gap endpoint m");
  construct->add_option("--k", k, "interval count");
  construct->add_option("--fill", fill_str, "occupied fraction of (m, 1)");
  construct->add_option("--gap", gap_str, "relative centered gap width");
  construct->add_option("--out", out, "output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "counterexample check of a configuration");
  verify->add_option("config", path, "configuration JSON file")->required();
  verify->add_option("--delta", delta_str, "delta (rational)")->required();
  verify->add_option("--out", out, "report file (default stdout)");

  auto* profile = app.add_subcommand("profile", "density profile CSV at a point");
  profile->add_option("config", path, "set JSON file")->required();
  profile->add_option("--point", point_str, "center point (rational)")->required();
  profile->add_option("--out", out, "CSV file (default stdout)");
  profile->add_option("--precision", precision, "decimal digits (default 12)");

  auto* sweep = app.add_subcommand("sweep", "minimal-N sweep over delta");
  sweep->add_option("--from", from_str, "first delta")->required();
  sweep->add_option("--to", to_str, "last delta")->required();
  sweep->add_option("--steps", steps, "number of steps")->required();
  sweep->add_option("--n-max", n_max, "largest N tried");
  sweep->add_option("--jobs", jobs, "parallel workers (default 1)");
  sweep->add_option("--out", out, "CSV file (default stdout)");
  sweep->add_flag("--timings", timings, "append a runtime_ms column (not reproducible)");

  auto* goodset = app.add_subcommand("goodset", "delta-good-set checks");
  auto* gverify = goodset->add_subcommand("verify", "run conditions (i) and (ii)");
  gverify->add_option("file", path, "generator JSON file");
  gverify->add_flag("--example", example, "use the built-in optimal example");
  gverify->add_option("--delta", delta_str, "delta (rational)");
  gverify->add_option("--periods", periods, "cut-grid periods (default 3)");
  gverify->add_option("--out", out, "report file (default stdout)");

  auto* oracle = app.add_subcommand("oracle", "analytic lemma oracles");
  auto* lxy = oracle->add_subcommand("lemmaxy", "abstract lower-bound oracle");
  lxy->add_option("--set", set_path, "interval-set JSON file")->required();
  lxy->add_option("--p", p_str, "window start (rational)")->required();
  lxy->add_option("--q", q_str, "window end (rational)")->required();
  lxy->add_option("--delta", delta_str, "delta (rational)")->required();
  lxy->add_option("--seed", seed, "seed for extra random grid points");
  lxy->add_option("--out", out, "findings file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    Rational tol = tol_str.empty() ? default_tolerance() : parse_rational(tol_str);
    if (roots->parsed()) return cmd_roots(tol);
    if (construct->parsed())
      return cmd_construct(family, parse_rational(delta_str), n, parse_rational(m_str), k,
                           parse_rational(fill_str), parse_rational(gap_str), out);
    if (verify->parsed()) return cmd_verify(path, parse_rational(delta_str), out);
    if (profile->parsed())
      return cmd_profile(path, parse_rational(point_str), out, precision);
    if (sweep->parsed())
      return cmd_sweep(parse_rational(from_str), parse_rational(to_str), steps, n_max,
                       jobs, out, timings);
    if (goodset->parsed()) {
      if (!gverify->parsed()) {
        std::cerr << "goodset: expected the 'verify' subcommand\n";
        return 2;
      }
      if (!example && path.empty()) {
        std::cerr << "goodset verify: need a file or --example\n";
        return 2;
      }
      return cmd_goodset_verify(path, example, parse_rational(delta_str), periods, out);
    }
    if (oracle->parsed()) {
      if (!lxy->parsed()) {
        std::cerr << "oracle: expected the 'lemmaxy' subcommand\n";
        return 2;
      }
      return cmd_oracle(set_path, parse_rational(p_str), parse_rational(q_str),
                        parse_rational(delta_str), seed, out);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
