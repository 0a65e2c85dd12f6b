#pragma once

#include <cstdint>
#include <vector>

#include "padyn/map31.hpp"
#include "padyn/padic_approx.hpp"

namespace padyn {

/// Which real radius map governs the norm dynamics. Exactly one case
/// applies to every canonical map: alpha < beta (then beta = delta),
/// delta < alpha = beta, or delta = alpha = beta.
enum class RadiusMapKind { PhiCase, ZetaCase, EtaCase };

RadiusMapKind radius_map_kind(const Map31& m);

enum class SphereClass {
  SiegelInterior,    // r < alpha: invariant, inside the Siegel disk
  InvariantAnnulus,  // alpha < r < beta (PhiCase only)
  CriticalAlpha,     // r = alpha
  CriticalBeta,      // r = beta (PhiCase)
  Escaping           // r > beta (Phi); r > alpha (Zeta/Eta)
};

SphereClass classify_sphere(const Map31& m, const NormExp& r);

/// True iff S_r(0) is invariant, i.e. r belongs to the set A.
bool radius_in_A(const Map31& m, const NormExp& r);

/// Deterministic branch of the radius map phi/zeta/eta. Critical radii
/// (r = alpha; r = beta in PhiCase; r = alpha^2/delta in ZetaCase) are
/// point-dependent and rejected: use critical_sphere_image with a point.
NormExp apply_radius_map(const Map31& m, const NormExp& r);

enum class CriticalVerdict {
  StaysOnCriticalSphere,
  LandsOnInvariantSphere,   // f^n(x) stays on S_|f(x)| for all n >= 1
  TransfersToOtherCritical, // alpha <-> beta exchange (PhiCase)
  CertifiedEscape
};

struct CriticalImage {
  NormExp next_norm;  // |f(x)|, exact
  CriticalVerdict verdict;
};

/// Image norm and fate of a point on a critical sphere (|x| = alpha, or
/// |x| = beta in PhiCase).
CriticalImage critical_sphere_image(const Map31& m, const PadicExact& x);

enum class OrbitTerminal {
  FixedOrCycling,
  InvariantSphereResident,
  EscapeCertified,
  SingularHit,
  BudgetExhausted
};

struct OrbitStep {
  std::size_t n;
  PadicExact point;
  NormExp norm;
};

struct OrbitTrace {
  std::vector<OrbitStep> steps;
  OrbitTerminal terminal;
  std::size_t at_step = 0;  // step of the terminal event
  std::size_t period = 0;   // FixedOrCycling only
};

struct OrbitOptions {
  std::size_t max_steps = 10000;
  std::size_t history_window = 64;   // cycle-detection lookback
  std::size_t max_bits = 1u << 20;   // rational size guard per iterate
};

/// Iterates f exactly. Terminates early with SingularHit on reaching
/// x_hat, FixedOrCycling on exact repetition, or EscapeCertified once the
/// norm enters the provably divergent region (r > beta in PhiCase,
/// r > alpha^2/delta in ZetaCase, r > alpha in EtaCase); the intermediate
/// zeta branch is iterated concretely so that pre-singular points are
/// never misclassified. Otherwise ends as InvariantSphereResident or
/// BudgetExhausted depending on whether the final norm lies in A.
OrbitTrace run_orbit(const Map31& m, const PadicExact& x,
                     const OrbitOptions& options = {});
OrbitTrace run_orbit(const Map31& m, const PadicExact& x,
                     std::size_t max_steps);

/// Radii r_k of the spheres containing the k-step pre-images of x_hat
/// (ZetaCase only): exp(r_k) = exp(alpha) + (exp(alpha) - exp(delta))/3^k.
/// The defining identity zeta^k(r_k) = alpha^2/delta is re-verified
/// symbolically for each k.
std::vector<NormExp> preimage_radius_ladder(const Map31& m, std::size_t k_max);

/// Displacement norm |f(c) - c| for any c on the invariant sphere S_r(0):
/// r^3/(alpha beta) for r < alpha, r^2/delta for alpha < r < beta.
NormExp rho(const Map31& m, const NormExp& r);

struct MinimalBallRow {
  unsigned m;
  NormExp ball_radius;  // r / p^m
  bool minimal;
};

struct MinimalBallReport {
  NormExp rho_radius;  // minimal invariant ball radius around any center
  std::vector<MinimalBallRow> rows;
};

/// rho(r) as the minimal invariant ball radius, plus for each m <= mmax
/// whether V_{r/p^m} is minimal invariant by the valuation criteria
/// (r^2 = p^{-v(b)-m} below alpha; r = p^{-v(a)-m} between alpha and beta).
MinimalBallReport minimal_invariant_ball(const Map31& m, const NormExp& r,
                                         unsigned mmax);

/// Exact check |f(x) - f(y)| = |x - y| for x, y on a common invariant
/// sphere (guaranteed true there).
bool local_isometry_check(const Map31& m, const PadicExact& x,
                          const PadicExact& y);

/// Index s = 2 v(x) - v(ax+b) > 0 of the first digit of f(x) that can
/// differ from x's: digits below s coincide, digit s differs. Verified at
/// digit level before returning.
long long digit_preservation_index(const Map31& m, const PadicExact& x);

/// Canonical representatives of the (p-1) p^(depth-1) balls of radius
/// r/p^depth covering S_r(0); r must be an integral power of p.
std::vector<PadicExact> sphere_partition(const NormExp& r, std::size_t depth,
                                         Prime p);

/// The map in truncated digit arithmetic, for long orbits on invariant
/// spheres where exact rationals are infeasible. Precision is tracked
/// honestly; on invariant spheres the relative precision of iterates
/// never drops below the requested one.
class ApproxMap {
 public:
  ApproxMap(const Map31& m, std::size_t precision);
  PadicApprox eval(const PadicApprox& x) const;
  PadicApprox seed(const PadicExact& x, std::size_t precision) const {
    return digit_expand(x, precision);
  }

 private:
  PadicApprox a_, b_;
};

}  // namespace padyn
