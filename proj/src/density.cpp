#include "densitylab/density.hpp"

#include <algorithm>
#include <stdexcept>

namespace densitylab {

namespace {

// Solution set of a density threshold inequality on one piece, as a closed
// subinterval of (0, inf).
struct SolSet {
  enum Kind { none, all, le, ge } kind = none;  // le: (0, x], ge: [x, inf)
  Rational x;
};

// f(w) >= T on the piece with numerator a + b*w. 2T - b is never zero for
// T in {delta, 1-delta} with 0 < delta < 1/2 and integer b.
SolSet solve_ge(const Rational& a, int b, const Rational& threshold) {
  Rational g = 2 * threshold - b;
  if (g > 0) {
    if (a > 0) return {SolSet::le, a / g};
    return {SolSet::none, 0};
  }
  if (a >= 0) return {SolSet::all, 0};
  return {SolSet::ge, a / g};
}

SolSet solve_le(const Rational& a, int b, const Rational& threshold) {
  Rational h = 2 * threshold - b;
  if (h > 0) {
    if (a <= 0) return {SolSet::all, 0};
    return {SolSet::ge, a / h};
  }
  if (a < 0) return {SolSet::le, a / h};
  return {SolSet::none, 0};
}

SolSet solve_side(const ProfilePiece& p, Side side, const Rational& delta) {
  return side == Side::B ? solve_ge(p.a, p.b, 1 - delta) : solve_le(p.a, p.b, delta);
}

}  // namespace

Rational DensityProfile::density(const Rational& omega) const {
  const ProfilePiece& p = piece_at(omega);
  return (p.a + p.b * omega) / (2 * omega);
}

const ProfilePiece& DensityProfile::piece_at(const Rational& omega) const {
  if (omega <= 0) throw std::invalid_argument("density: omega must be positive");
  if (capped && omega > cap) throw std::invalid_argument("density: omega beyond profile cap");
  std::size_t idx = std::lower_bound(breakpoints.begin(), breakpoints.end(), omega) -
                    breakpoints.begin();
  if (idx >= pieces.size()) idx = pieces.size() - 1;
  return pieces[idx];
}

Rational DensityProfile::zero_limit() const { return Rational(pieces.front().b) / 2; }

Rational DensityProfile::tail_limit() const {
  if (capped) throw std::logic_error("tail_limit: profile is capped");
  return Rational(pieces.back().b) / 2;
}

namespace {

DensityProfile build_profile_from(const LineSet& s, const Rational& c,
                                  const std::optional<Rational>& cap,
                                  const std::vector<Rational>& bpoints) {
  DensityProfile prof;
  prof.center = c;

  std::vector<Rational>& radii = prof.breakpoints;
  for (const auto& e : bpoints) {
    Rational d = rat_abs(c - e);
    if (d > 0 && (!cap || d <= *cap)) radii.push_back(d);
  }
  std::sort(radii.begin(), radii.end());
  radii.erase(std::unique(radii.begin(), radii.end()), radii.end());

  if (cap) {
    prof.capped = true;
    prof.cap = *cap;
  }

  Rational a = 0;
  int prev_b = 0;
  Rational prev_hi = 0;
  const std::size_t npieces = radii.size() + ((cap && !radii.empty() && radii.back() == *cap) ? 0 : 1);
  for (std::size_t j = 0; j < npieces; ++j) {
    ProfilePiece piece;
    piece.lo = prev_hi;
    bool last = j >= radii.size();
    Rational sample;
    if (!last) {
      piece.hi = radii[j];
      sample = (piece.lo + piece.hi) / 2;
    } else if (cap) {
      piece.hi = *cap;
      sample = (piece.lo + piece.hi) / 2;
    } else {
      piece.unbounded = true;
      sample = piece.lo + 1;
    }
    int b = (s.contains(c - sample) ? 1 : 0) + (s.contains(c + sample) ? 1 : 0);
    if (j == 0) {
      piece.a = 0;
    } else {
      piece.a = a + (prev_b - b) * piece.lo;
    }
    piece.b = b;
    a = piece.a;
    prev_b = b;
    prev_hi = last ? prev_hi : radii[j];
    prof.pieces.push_back(std::move(piece));
  }
  return prof;
}

DensityProfile build_profile(const LineSet& s, const Rational& c,
                             const std::optional<Rational>& cap) {
  std::vector<Rational> bpoints =
      cap ? s.boundary_points_in(c - *cap, c + *cap) : s.boundary_points();
  return build_profile_from(s, c, cap, bpoints);
}

}  // namespace

DensityProfile density_profile(const LineSet& s, const Rational& c) {
  if (s.has_periodic_zone())
    throw std::logic_error("density_profile: periodic tails need a cap");
  return build_profile(s, c, std::nullopt);
}

DensityProfile density_profile_capped(const LineSet& s, const Rational& c,
                                      const Rational& cap) {
  if (cap <= 0) throw std::invalid_argument("density_profile_capped: cap must be positive");
  return build_profile(s, c, cap);
}

DensityProfile density_profile_from_boundaries(const LineSet& s, const Rational& c,
                                               const std::vector<Rational>& boundary_pts) {
  if (s.has_periodic_zone())
    throw std::logic_error("density_profile: periodic tails need a cap");
  return build_profile_from(s, c, std::nullopt, boundary_pts);
}

Rational density_at(const LineSet& s, const Rational& c, const Rational& omega) {
  if (omega <= 0) throw std::invalid_argument("density_at: omega must be positive");
  return s.measure_within(c - omega, c + omega) / (2 * omega);
}

namespace {

DensityExtrema extrema_impl(const DensityProfile& prof, bool include_tail) {
  DensityExtrema ext;
  bool first = true;
  auto consider = [&](const Rational& value, bool attained, const std::optional<Rational>& radius) {
    if (first) {
      ext.inf = {value, attained, radius};
      ext.sup = {value, attained, radius};
      first = false;
      return;
    }
    if (value < ext.inf.value || (value == ext.inf.value && attained && !ext.inf.attained))
      ext.inf = {value, attained, radius};
    if (value > ext.sup.value || (value == ext.sup.value && attained && !ext.sup.attained))
      ext.sup = {value, attained, radius};
  };

  // constant first piece: value attained throughout (0, hi]
  {
    const ProfilePiece& p0 = prof.pieces.front();
    Rational r0 = p0.unbounded ? Rational(1) : p0.hi;
    consider(Rational(p0.b) / 2, true, r0);
  }
  for (const auto& bp : prof.breakpoints) consider(prof.density(bp), true, bp);

  const ProfilePiece& last = prof.pieces.back();
  if (last.unbounded) {
    if (include_tail) {
      if (last.a == 0) {
        consider(Rational(last.b) / 2, true, last.lo + 1);
      } else {
        consider(Rational(last.b) / 2, false, std::nullopt);
      }
    }
  } else if (prof.capped && (prof.breakpoints.empty() || prof.breakpoints.back() != prof.cap)) {
    consider(prof.density(prof.cap), true, prof.cap);
  }
  return ext;
}

}  // namespace

DensityExtrema density_extrema(const DensityProfile& prof) {
  if (prof.capped) throw std::logic_error("density_extrema: capped profile");
  return extrema_impl(prof, true);
}

DensityExtrema density_extrema_capped(const DensityProfile& prof) {
  return extrema_impl(prof, !prof.capped);
}

bool stays_inside(const DensityProfile& prof, const Rational& delta) {
  DensityExtrema ext = extrema_impl(prof, !prof.capped);
  bool low_ok = ext.inf.value > delta || (ext.inf.value == delta && !ext.inf.attained);
  bool high_ok = ext.sup.value < 1 - delta || (ext.sup.value == 1 - delta && !ext.sup.attained);
  return low_ok && high_ok;
}

std::optional<BadRadius> greatest_bad_radius(const DensityProfile& prof,
                                             const Rational& delta) {
  for (auto it = prof.pieces.rbegin(); it != prof.pieces.rend(); ++it) {
    const ProfilePiece& p = *it;
    std::optional<BadRadius> best;
    for (Side side : {Side::B, Side::W}) {
      SolSet sol = solve_side(p, side, delta);
      if (sol.kind == SolSet::none) continue;
      if (p.unbounded) {
        if (sol.kind == SolSet::all || sol.kind == SolSet::ge)
          throw std::logic_error("greatest_bad_radius: bad set is unbounded");
        if (sol.x >= p.lo && sol.x > 0) {
          if (!best || sol.x > best->omega) best = BadRadius{sol.x, side};
        }
      } else {
        Rational hi = p.hi;
        Rational lo = p.lo;
        std::optional<Rational> top;
        switch (sol.kind) {
          case SolSet::all: top = hi; break;
          case SolSet::le: if (sol.x >= lo) top = rat_min(sol.x, hi); break;
          case SolSet::ge: if (sol.x <= hi) top = hi; break;
          default: break;
        }
        if (top && *top > 0 && (!best || *top > best->omega)) best = BadRadius{*top, side};
      }
    }
    if (best) return best;
  }
  return std::nullopt;
}

std::optional<BadRadius> any_bad_radius(const DensityProfile& prof, const Rational& delta) {
  for (const ProfilePiece& p : prof.pieces) {
    std::optional<BadRadius> best;
    Rational hi = p.unbounded ? Rational(p.lo + 1) : p.hi;
    for (Side side : {Side::B, Side::W}) {
      SolSet sol = solve_side(p, side, delta);
      std::optional<Rational> witness;
      switch (sol.kind) {
        case SolSet::all:
          witness = hi;
          break;
        case SolSet::le:
          if (sol.x >= p.lo) witness = rat_min(sol.x, hi);
          break;
        case SolSet::ge:
          if (p.unbounded || sol.x <= p.hi) witness = rat_max(sol.x, p.lo);
          break;
        default:
          break;
      }
      if (witness && *witness > 0 && (!best || *witness < best->omega))
        best = BadRadius{*witness, side};
    }
    if (best) return best;
  }
  return std::nullopt;
}

/// The returned omega is 0 (a non-radius) when the bad set has infimum 0,
/// i.e. arbitrarily small bad radii exist but no least one.
std::optional<BadRadius> least_bad_radius(const DensityProfile& prof, const Rational& delta) {
  for (const ProfilePiece& p : prof.pieces) {
    std::optional<BadRadius> best;
    for (Side side : {Side::B, Side::W}) {
      SolSet sol = solve_side(p, side, delta);
      std::optional<Rational> bottom;
      switch (sol.kind) {
        case SolSet::all:
          bottom = p.lo;
          break;
        case SolSet::le:
          if (sol.x >= p.lo) bottom = p.lo;
          break;
        case SolSet::ge:
          if (p.unbounded || sol.x <= p.hi) bottom = rat_max(sol.x, p.lo);
          break;
        default:
          break;
      }
      if (bottom && (!best || *bottom < best->omega)) best = BadRadius{*bottom, side};
    }
    if (best) return best;
  }
  return std::nullopt;
}

std::optional<Rational> least_upper_crossing(const DensityProfile& prof,
                                             const Rational& delta) {
  const Rational threshold = 1 - delta;
  for (const ProfilePiece& p : prof.pieces) {
    SolSet sol = solve_ge(p.a, p.b, threshold);
    if (sol.kind == SolSet::none) continue;
    if (p.lo == 0) {
      // constant first piece: either never or always at threshold
      if (sol.kind == SolSet::all || (sol.kind == SolSet::le && sol.x > 0))
        return std::nullopt;  // no minimal crossing radius
      continue;
    }
    switch (sol.kind) {
      case SolSet::all:
        return p.lo;
      case SolSet::le:
        if (sol.x >= p.lo) return p.lo;
        break;
      case SolSet::ge:
        if (p.unbounded || sol.x <= p.hi) return rat_max(sol.x, p.lo);
        break;
      default:
        break;
    }
  }
  return std::nullopt;
}

bool triangle_check(const DensityProfile& prof, const Rational& gamma,
                    const Rational& delta) {
  if (gamma <= 0) throw std::invalid_argument("triangle_check: gamma must be positive");
  auto crossing = least_upper_crossing(prof, delta);
  return crossing && *crossing == gamma;
}

bool triangle_check(const LineSet& s, const Rational& c, const Rational& gamma,
                    const Rational& delta) {
  DensityProfile prof = s.has_periodic_zone() ? density_profile_capped(s, c, gamma)
                                              : density_profile(s, c);
  return triangle_check(prof, gamma, delta);
}

std::optional<BadRadius> max_bad_radius(const Configuration& c, const Rational& p,
                                        const Rational& delta) {
  if (!(delta > 0 && delta < Rational(1, 2)))
    throw std::invalid_argument("max_bad_radius: delta must be in (0, 1/2)");
  bool is_endpoint = p == 0;
  for (const auto& e : c.body().endpoints()) is_endpoint = is_endpoint || e == p;
  if (!is_endpoint)
    throw std::invalid_argument("max_bad_radius: " + to_string(p) +
                                " is not an endpoint of the configuration");
  LineSet line = LineSet::from_configuration(c);
  return greatest_bad_radius(density_profile(line, p), delta);
}

bool max_up_to(const DensityProfile& prof, const Rational& gamma, const Rational& delta) {
  Rational fg = prof.density(gamma);
  if (fg < 1 - delta) return false;
  if (prof.zero_limit() > fg) return false;
  for (const auto& bp : prof.breakpoints) {
    if (bp >= gamma) break;
    if (prof.density(bp) > fg) return false;
  }
  return true;
}

}  // namespace densitylab
