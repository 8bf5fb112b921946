#ifndef DENSITYLAB_PERIODIC_HPP
#define DENSITYLAB_PERIODIC_HPP

#include <memory>
#include <optional>

#include "densitylab/density.hpp"
#include "densitylab/periodic_set.hpp"
#include "densitylab/verifier.hpp"

namespace densitylab {

/// Exact lambda(H ^ (x, y)) for H = G + Z.
Rational periodic_measure(const PeriodicSet& p, const Rational& x, const Rational& y);

/// What the density of a set with periodic/solid/empty tails provably does
/// for radii beyond W: stays strictly inside (delta, 1-delta), stays at or
/// beyond one of the thresholds, or cannot be decided by the envelope
/// (the limit hits a threshold exactly).
struct TailCertificate {
  enum class Kind { inside, outside_high, outside_low, undecidable };
  Kind kind = Kind::undecidable;
  Rational w;      // radii > W are certified (>= W for the outside kinds)
  Rational limit;  // density limit as omega -> inf
};

TailCertificate tail_certificate(const LineSet& s, const Rational& c,
                                 const Rational& delta);

struct PeriodicProfile {
  DensityProfile profile;  // capped at tail.w
  TailCertificate tail;
};

/// Truncated exact profile plus the tail certificate confining any bad
/// radii to (0, W] when the certificate kind is `inside`.
PeriodicProfile periodic_density_profile(const PeriodicSet& p, const Rational& c,
                                         const Rational& delta);

/// Condition (i) of a delta-good set: every endpoint of H has a radius
/// with density outside (delta, 1-delta). Witness radii are recorded.
VerificationReport check_good_i(const PeriodicSet& p, const Rational& delta);

/// One cut: the pair a < b, with a = nullopt meaning -inf (which collapses
/// the half-line shape onto the plain truncation).
struct Cut {
  std::optional<Rational> a;
  Rational b;
};

/// Bounded falsifier for condition (ii) over the supplied cuts: for each
/// cut and cut-set shape, searches for an endpoint whose density stays
/// strictly inside (delta, 1-delta) for every radius. A cut/shape with no
/// such endpoint is reported as a violation.
VerificationReport check_good_ii_bounded(const PeriodicSet& p, const Rational& delta,
                                         const std::vector<Cut>& cuts);

/// Endpoint-anchored cut grid: endpoints + offsets {0, 1/7, 1/3} over
/// `periods` whole periods, all ordered pairs.
std::vector<Cut> default_cut_grid(const PeriodicSet& p, int periods = 3);

struct WitnessInterval {
  Rational center;
  Rational radius;
  Rational density;  // exact density of H on the interval
};

enum class Direction { left, right };

/// An interval I with lambda(H | I) relating to 1-delta by the triangle
/// relation, centered at an endpoint of H, with `s` inside and the center
/// on the requested side of s. Requires s not interior to H. The search
/// window is widened once before giving up.
std::optional<WitnessInterval> find_upper_interval(const PeriodicSet& p,
                                                   const Rational& s,
                                                   const Rational& delta,
                                                   Direction direction);

/// An interval centered between the endpoints p0 <= q0 of H whose strictly
/// smaller radii keep the density inside the band, and which satisfies one
/// of the two threshold disjunctions of the between-endpoints lemma.
std::optional<WitnessInterval> find_between_interval(const PeriodicSet& p,
                                                     const Rational& p0,
                                                     const Rational& q0,
                                                     const Rational& delta);

/// Finitely many intervals covering [0, 1] (hence R by periodicity), each
/// with lambda(H | I) >= 1 - delta. Throws when a gap cannot be covered.
std::vector<Interval> cover_period(const PeriodicSet& p, const Rational& delta);

}  // namespace densitylab

#endif
