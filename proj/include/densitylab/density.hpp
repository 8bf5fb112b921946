#ifndef DENSITYLAB_DENSITY_HPP
#define DENSITYLAB_DENSITY_HPP

#include <optional>
#include <vector>

#include "densitylab/line_set.hpp"

namespace densitylab {

/// Side of the bad band: B means density >= 1 - delta, W means <= delta.
enum class Side { B, W };

inline const char* side_name(Side s) { return s == Side::B ? "B" : "W"; }

/// On (lo, hi], lambda(S ^ I_omega(c)) = a + b * omega with b in {0, 1, 2}.
struct ProfilePiece {
  Rational lo;
  Rational hi;  // ignored when unbounded
  bool unbounded = false;
  Rational a;
  int b = 0;
};

/// Exact piecewise description of omega -> lambda(S ^ I_omega(c)) / (2 omega).
/// Breakpoints are the critical radii |c - e| over the endpoints e of the
/// set; between consecutive breakpoints the density is monotone, with
/// direction given by the sign of -a.
struct DensityProfile {
  Rational center;
  std::vector<Rational> breakpoints;
  std::vector<ProfilePiece> pieces;
  bool capped = false;  // capped: valid on (0, cap]; else on (0, inf)
  Rational cap;

  Rational density(const Rational& omega) const;
  const ProfilePiece& piece_at(const Rational& omega) const;

  /// Density limit as omega -> 0+ (the first piece is constant).
  Rational zero_limit() const;

  /// Density limit as omega -> inf; uncapped profiles only.
  Rational tail_limit() const;
};

/// Exact profile of S at center c, valid for all omega > 0. Requires both
/// tails of S finite (empty or solid).
DensityProfile density_profile(const LineSet& s, const Rational& c);

/// Profile truncated to (0, cap]; works for periodic tails too.
DensityProfile density_profile_capped(const LineSet& s, const Rational& c,
                                      const Rational& cap);

/// As density_profile, but reuses a precomputed boundary-point list (for
/// sweeps over many centers of one fixed set).
DensityProfile density_profile_from_boundaries(const LineSet& s, const Rational& c,
                                               const std::vector<Rational>& boundary_pts);

/// lambda(S ^ I_omega(c)) / (2 omega), computed directly from measures.
Rational density_at(const LineSet& s, const Rational& c, const Rational& omega);

struct Extremum {
  Rational value;
  bool attained = true;
  std::optional<Rational> radius;  // a witness radius when attained
};

struct DensityExtrema {
  Extremum inf;
  Extremum sup;
};

/// Exact extrema of the density over omega in (0, inf), via piecewise
/// monotonicity; uncapped profiles only.
DensityExtrema density_extrema(const DensityProfile& prof);

/// Extrema over radii in (0, cap] of a capped (or uncapped) profile.
DensityExtrema density_extrema_capped(const DensityProfile& prof);

/// True iff the density stays strictly inside (delta, 1 - delta) for every
/// radius covered by the profile (all of (0, inf) when uncapped).
bool stays_inside(const DensityProfile& prof, const Rational& delta);

struct BadRadius {
  Rational omega;
  Side side;
};

/// Bad radii are those with density outside the open band (delta, 1-delta).
/// The bad set is closed in (0, inf); these return its max / min over the
/// profile's validity range, when the extremum exists.
std::optional<BadRadius> greatest_bad_radius(const DensityProfile& prof,
                                             const Rational& delta);
std::optional<BadRadius> least_bad_radius(const DensityProfile& prof,
                                          const Rational& delta);
/// Some bad radius, scanning small radii first.
std::optional<BadRadius> any_bad_radius(const DensityProfile& prof,
                                        const Rational& delta);

/// Least radius at which the density reaches >= 1 - delta (so the triangle
/// relation holds there by minimality), if any within the profile range.
std::optional<Rational> least_upper_crossing(const DensityProfile& prof,
                                             const Rational& delta);

/// The triangle relation at gamma: density(gamma) >= 1 - delta and
/// density(eps) < 1 - delta for all 0 < eps < gamma.
bool triangle_check(const DensityProfile& prof, const Rational& gamma,
                    const Rational& delta);
bool triangle_check(const LineSet& s, const Rational& c, const Rational& gamma,
                    const Rational& delta);

/// omega(p): the greatest radius at which the density at the endpoint p of
/// C leaves the open band (delta, 1-delta), with its side, or nothing when
/// the density stays inside for every radius. p must be an endpoint of C.
std::optional<BadRadius> max_bad_radius(const Configuration& c, const Rational& p,
                                        const Rational& delta);

/// Hypothesis of the one-sided lemma: density(gamma) >= 1 - delta and
/// density(eps) <= density(gamma) for all 0 < eps < gamma.
bool max_up_to(const DensityProfile& prof, const Rational& gamma,
               const Rational& delta);

}  // namespace densitylab

#endif
