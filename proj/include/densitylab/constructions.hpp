#ifndef DENSITYLAB_CONSTRUCTIONS_HPP
#define DENSITYLAB_CONSTRUCTIONS_HPP

#include <optional>

#include "densitylab/periodic_set.hpp"
#include "densitylab/verifier.hpp"

namespace densitylab {

/// Parameters of the gap-every-other-interval family:
///   alpha = (1+2d-4d^2)/(4(1+3d)), beta = 2d^2/(1+3d),
///   phi = 1/(2(1+3d)),  psi = d/(1+3d),  m = 4d^2/(1+3d+4d^2),
/// with phi + psi + alpha + beta + alpha + psi = 1.
struct KurkaParams {
  Rational delta;
  Rational alpha, beta, phi, psi, m;
  // validity window conditions, flagged rather than fatal (sweeps probe
  // outside the window)
  bool above_root = false;       // 8d^3 + 8d^2 + d - 1 > 0
  bool below_upper_gap = false;  // 4d^2 + 2d - 1 <= 0, i.e. d <= (sqrt5-1)/4
  bool above_lower_gap = false;  // 4d^2 - 6d + 1 <= 0, i.e. d >= (3-sqrt5)/4
  bool valid() const { return above_root && below_upper_gap && above_lower_gap; }
};

KurkaParams kurka_params(const Rational& delta);

/// S_N: N full periods of (k1,l1) u (k2,l2) u (k3,l3) plus a final copy of
/// (k1,l1); 3N+1 intervals of total measure N(phi+2alpha)+phi.
IntervalSet kurka_sn(const Rational& delta, int n);

/// Scale factor of the affine map u_N (0 -> m, N+phi -> 1).
Rational kurka_un_scale(const KurkaParams& p, int n);

/// C_N = (-inf, 0) u u_N(S_N).
Configuration kurka_cn(const Rational& delta, int n);

/// lambda(u_N(S_N)), the quantity compared against 2 delta.
Rational kurka_cn_body_measure(const Rational& delta, int n);

/// Exact check of the per-endpoint radii of the construction: case I
/// (radius phi, density exactly 1-delta), case II (radius alpha, density
/// 1 - beta/2alpha >= 1-delta), case III (radius psi+phi, density exactly
/// 1-delta), plus the three boundary radii on C_N (1-m at m and 0; 1 at 1
/// -- the last holds exactly when lambda(u_N(S_N)) <= 2 delta).
VerificationReport verify_claim_radii(const Rational& delta, int n);

/// Least N <= n_max with is_counterexample(kurka_cn(delta, N)) passing.
/// The cheap measure threshold lambda(u_N(S_N)) <= 2 delta is tested
/// first; full endpoint verification runs only on candidates.
std::optional<int> minimal_counterexample_n(const Rational& delta, int n_max);

/// k equal intervals occupying fraction `fill` of (m, 1), uniformly
/// spaced with a gap before each interval, last right endpoint 1.
Configuration szenes_config(const Rational& m, int k, const Rational& fill);

/// Same layout with a centered gap of relative width `gap` inside each
/// interval; gap = 0 reduces to szenes_config.
Configuration cgo_config(const Rational& m, int k, const Rational& fill,
                         const Rational& gap);

/// G = (S_1 - phi/2) ^ [0, 1]: four pieces, lambda G = phi + 2 alpha
/// = (1-delta)(1+2delta)/(1+3delta), mirror symmetric about 1/2.
PeriodicSet good_set_example(const Rational& delta);

}  // namespace densitylab

#endif
