#pragma once

#include <optional>
#include <utility>

#include "padyn/sphere_dynamics.hpp"

namespace padyn {

/// The degree-6 polynomial P with numerator(f^2(x) - x) = x^3 P(x),
/// evaluated through the closed form P = M^3 + a x M D + b D^2 where
/// M = x^2 + a x + b and D = a x + b. The expansion
/// x^6 + 3a x^5 + (3b+4a^2) x^4 + (7ab+2a^3) x^3 + (3b^2+6a^2b) x^2
/// + 6ab^2 x + 2b^3 is pinned by tests.
PadicExact sextic_P(const PadicExact& a, const PadicExact& b,
                    const PadicExact& x);

/// b^3 + (3a+3) b^2 + (4a^2+7a+3) b + (2a^3+6a^2+6a+2): vanishes exactly
/// when P(b) = 0 (for b != 0, by P(b) = b^3 * cubic).
PadicExact lemma8_cubic(const PadicExact& a, const PadicExact& b);

/// Rational points on the parameter curve through its singular point
/// (b, a) = (0, -1): b = h(q) = q/(1 + 3q + 4q^2 + 2q^3), a = q h(q) - 1.
/// Guarantees ab != 0 and that the curve equation vanishes. The excluded
/// slopes are q = -1 (pole of h) and q in {0, -1/2} (ab = 0).
std::pair<BigRat, BigRat> h_param(const BigRat& q);  // returns (b, a)

/// Exact 2-periodic-orbit certificate for the map built from h_param(q).
/// Every field is recorded independently so that inconsistencies surface
/// as data rather than failures.
struct PeriodicOrbitCert {
  BigRat q;
  PadicExact a, b;
  PadicExact orbit0, orbit1;  // b and f(b)
  NormExp norm0, norm1;
  bool r_in_A = false;              // |b| is an invariant sphere radius
  bool sqrt_disc_exists = false;    // sqrt(a^2 - 4b) exists in Q_p
  bool verified = false;            // f(f(b)) = b exactly
  bool singular_hit = false;        // f(b) = x_hat: second step undefined
  std::optional<NormExp> multiplier_norm;  // |f'(b)| * |f'(f(b))|
};

PeriodicOrbitCert build_2periodic(const BigRat& q, Prime p);

/// For a verified 2-periodic pair {t1, t2}: whether |f(x) - t2| equals
/// |x - t1| exactly (true by the isometry around periodic points).
bool orbit_sphere_swap_check(const Map31& m, const PadicExact& t1,
                             const PadicExact& t2, const PadicExact& x);

/// The implication "|b| an invariant radius => |a| != 1" for this map
/// (vacuously true when |b| is not in A).
bool prop5_check(const Map31& m);

}  // namespace padyn
