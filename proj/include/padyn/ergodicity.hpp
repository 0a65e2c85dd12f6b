#pragma once

#include <optional>
#include <string>
#include <vector>

#include "padyn/sphere_dynamics.hpp"

namespace padyn {

/// The set A of invariant sphere radii as an exact interval description:
/// (0, alpha) when the root norms coincide, (0, beta) \ {alpha} when they
/// differ.
enum class InvariantSetKind { EqualRootsCase, DistinctRootsCase };

struct InvariantRadiusSet {
  InvariantSetKind kind;
  NormExp alpha, beta;

  bool contains(const NormExp& r) const {
    if (r.is_zero()) return false;
    if (kind == InvariantSetKind::EqualRootsCase) return r < alpha;
    return r < beta && r != alpha;
  }
  std::string to_string() const;
};

InvariantRadiusSet invariant_radius_set(const Map31& m);

/// Normalized Haar measure of a ball V_rho(c) inside the sphere S_r(0):
/// rho / (r (1 - 1/p)). Both radii must be integral powers of p with
/// rho <= r/p.
BigRat haar_measure(const NormExp& ball_radius, const NormExp& sphere_radius,
                    Prime p);

enum class VerdictKind { Ergodic, NotErgodic, Undecided };

struct WitnessBall {
  PadicExact center;
  NormExp radius;
  BigRat measure;  // in (0, 1): the non-ergodicity certificate
};

/// Mod-4 coefficient-sum profile of a rational self-map of the 2-adic
/// units (numerator / denominator polynomial pair).
struct MemicProfile {
  int a1, a2, b1, b2;              // residues mod 4
  std::optional<int> matched_case; // 1..4 when some criterion case holds
  bool interchanged = false;       // matched with the pair swapped
  bool ergodic = false;
};

struct ErgodicityVerdict {
  VerdictKind kind;
  std::string reason;
  NormExp sphere;
  std::optional<WitnessBall> witness;
  std::optional<MemicProfile> memic;
};

/// Non-ergodicity verdicts that need no unit-sphere reduction. p >= 3 is
/// never ergodic (invariant first-digit ball of measure 1/(p-1)); p = 2
/// with equal root norms, or with distinct root norms on r != beta/2, is
/// not ergodic (invariant ball V_rho(r) of measure 2 rho(r)/r < 1). The
/// remaining p = 2 sphere r = beta/2 is deferred.
ErgodicityVerdict theorem6_verdict(const Map31& m, const NormExp& r);

/// Coefficients are 2-adic integers given as rationals with odd
/// denominators; both polynomials must map the 2-adic units into
/// themselves (value at 1 odd). Coefficient lists are ascending.
MemicProfile memic_profile(const std::vector<BigRat>& num_coeffs,
                           const std::vector<BigRat>& den_coeffs);

/// Coefficients (ascending) of the conjugation of f by g(t) = p^s t:
/// numerator p^{2s} t^3 + p^s a t^2 + b t, denominator p^s a t + b.
struct RationalMapCoeffs {
  std::vector<BigRat> num;
  std::vector<BigRat> den;
};

RationalMapCoeffs scale_conjugate(const Map31& m, long long s);

/// Multiplies numerator and denominator by the power of 2 that makes all
/// coefficients 2-adic integers.
RationalMapCoeffs clear_to_2adic(const RationalMapCoeffs& coeffs);

/// Ergodicity of (S_{beta/2}(0), f, mu) for p = 2 in the distinct-norms
/// case: when 4 alpha <= beta the unit-sphere conjugation is built with
/// s = 1 - exp(beta), cleared, and its memic profile re-derived (a case
/// always matches, giving Ergodic). Otherwise the reduction is attempted
/// and the verdict stays Undecided when the cleared pair fails the
/// unit self-map requirement.
ErgodicityVerdict theorem9_verdict(const Map31& m);

/// Combined flow: theorem6, then the unit-sphere reduction for the
/// deferred p = 2 sphere.
ErgodicityVerdict ergodicity_verdict(const Map31& m, const NormExp& r);

struct FrequencyCell {
  PadicExact rep;
  std::uint64_t count;
};

struct FrequencyTable {
  std::vector<FrequencyCell> cells;
  std::uint64_t total = 0;
  std::size_t depth = 0;
  BigRat haar_weight;  // identical for every cell of the partition
};

/// Statistical evidence only, never a verdict: iterates x0 with the
/// digit-exact truncated arithmetic and bins each iterate into the
/// depth-d partition of its sphere.
FrequencyTable equidistribution_probe(const Map31& m, const NormExp& r,
                                      const PadicExact& x0,
                                      std::uint64_t iterations,
                                      std::size_t depth);

}  // namespace padyn
