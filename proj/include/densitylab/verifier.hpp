#ifndef DENSITYLAB_VERIFIER_HPP
#define DENSITYLAB_VERIFIER_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "densitylab/density.hpp"
#include "densitylab/intervals.hpp"

namespace densitylab {

struct Finding {
  std::string label;
  std::optional<Rational> endpoint;
  std::optional<Rational> omega;
  std::optional<Side> side;
  bool violation = false;
  bool skipped = false;
  std::string detail;
};

/// Result of a verification run; passed is true iff no finding is a
/// violation.
struct VerificationReport {
  std::string subject;
  bool passed = true;
  std::vector<Finding> findings;

  void add(Finding f) {
    if (f.violation) passed = false;
    findings.push_back(std::move(f));
  }
  void witness(std::string label, const Rational& endpoint, const Rational& omega,
               Side side, std::string detail = {}) {
    add({std::move(label), endpoint, omega, side, false, false, std::move(detail)});
  }
  void violation_at(std::string label, const Rational& endpoint, std::string detail) {
    add({std::move(label), endpoint, std::nullopt, std::nullopt, true, false,
         std::move(detail)});
  }
  void condition(std::string label, bool holds, std::string detail) {
    add({std::move(label), std::nullopt, std::nullopt, std::nullopt, !holds, false,
         std::move(detail)});
  }
  void skip(std::string label, std::string detail) {
    add({std::move(label), std::nullopt, std::nullopt, std::nullopt, false, true,
         std::move(detail)});
  }
};

/// Decides whether C is a counterexample to K(delta): passed iff EVERY
/// endpoint of C has some radius with density outside (delta, 1 - delta).
/// Witness radii are recorded per endpoint; a violating endpoint (density
/// inside the band for all radii) is reported.
VerificationReport is_counterexample(const Configuration& c, const Rational& delta);

struct EndpointRadius {
  Rational endpoint;
  Rational omega;  // greatest bad radius
  Side side;
};

struct SzenesQuantities {
  Rational v_b;
  Rational v_w;
  Rational rho;  // lambda(C ^ (0,1))
  std::vector<EndpointRadius> table;
};

/// The quantities of the minimal-counterexample analysis; requires every
/// endpoint to have a bad radius (i.e. is_counterexample passed). Throws
/// naming the offending endpoint or the empty defining range otherwise.
SzenesQuantities szenes_quantities(const Configuration& c, const Rational& delta);

/// Named objects handed to a property-bundle check.
struct BundleObjects {
  std::map<std::string, Rational> scalars;
  std::map<std::string, IntervalSet> sets;
};

/// Evaluates the stated conditions of one of the lemma bundles exactly:
///   "lemmaa-abc"       needs set D, scalars a, b, counterexample_intervals
///   "lemmab-i-vii"     needs set D, scalars a, b, a_prime, b_prime,
///                      eps_a, eps_b, counterexample_intervals
///   "lemmabwlog-viii-ix" needs scalars a, b, a_prime, b_prime, eps_a, eps_b
///   "lemmad-I-IV"      needs set F, scalar counterexample_intervals
/// Minimality conditions are checked against the supplied interval-count
/// budget. Missing symbols raise std::invalid_argument naming the symbol.
VerificationReport check_property_bundle(const std::string& bundle,
                                         const BundleObjects& objects,
                                         const Rational& delta);

}  // namespace densitylab

#endif
