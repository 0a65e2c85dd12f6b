#pragma once

#include <optional>
#include <vector>

#include "padyn/newton_polygon.hpp"
#include "padyn/padic_exact.hpp"
#include "padyn/poly.hpp"

namespace padyn {

/// General (3,1)-rational map f(x) = (x^3 + a x^2 + b x + c) / (d x + e),
/// d != 0, over a common prime context.
struct Map31General {
  PadicExact a, b, c, d, e;

  Map31General(PadicExact a_, PadicExact b_, PadicExact c_, PadicExact d_,
               PadicExact e_);

  const Prime& prime() const { return a.prime(); }
  /// Singular point -e/d.
  PadicExact x_hat() const { return -(e / d); }
  PadicExact eval(const PadicExact& x) const;
  /// Fixed-point cubic x^3 + (a-d) x^2 + (b-e) x + c.
  Poly fixed_point_cubic() const;
};

/// Canonical map f(x) = (x^3 + a x^2 + b x) / (a x + b) with a*b != 0.
/// Its unique fixed point is 0 and f'(0) = 1 (indifferent). The root
/// norms alpha <= beta of x^2 + a x + b, delta = |a|_p, the singular
/// point x_hat = -b/a and the discriminant a^2 - 4b are cached.
class Map31 {
 public:
  Map31(PadicExact a, PadicExact b);

  const PadicExact& a() const { return a_; }
  const PadicExact& b() const { return b_; }
  const Prime& prime() const { return a_.prime(); }
  const NormExp& alpha() const { return alpha_; }
  const NormExp& beta() const { return beta_; }
  const NormExp& delta() const { return delta_; }
  const PadicExact& x_hat() const { return x_hat_; }
  const PadicExact& disc() const { return disc_; }

  /// Exact value of f(x); throws SingularPoint at x = x_hat.
  PadicExact eval(const PadicExact& x) const;

  /// |f(x)|_p computed from norms alone: |x| |x^2+ax+b| / |ax+b|.
  NormExp norm_f(const PadicExact& x) const;

  /// Exact derivative value via
  /// (2a x^3 + (3b + a^2) x^2 + 2ab x + b^2) / (a x + b)^2.
  PadicExact f_prime(const PadicExact& x) const;
  NormExp f_prime_norm(const PadicExact& x) const { return f_prime(x).norm(); }

 private:
  PadicExact a_, b_, x_hat_, disc_;
  NormExp alpha_, beta_, delta_;
};

enum class FixedPointKind { TripleRoot, DoubleAndSimple, ThreeDistinct };

/// Multiplicity pattern of the fixed-point cubic. Rational roots are
/// listed exactly; roots outside Q are summarised by the residual factor.
struct FixedPointStructure {
  FixedPointKind kind;
  std::vector<PadicExact> roots;
  std::vector<Poly> symbolic_factors;  // unfactored residual parts over Q
};

FixedPointStructure fixed_point_structure(const Map31General& m);

struct CanonicalReduction {
  PadicExact x0;  // the unique fixed point of the general map
  Map31 map;      // conjugated canonical form (A, B)
};

/// Conjugates a unique-fixed-point map to canonical form by h(t) = t + x0:
/// A = d, B = d x0 + e. Throws NotUniqueFixedPoint or DegenerateAB.
CanonicalReduction reduce_to_canonical(const Map31General& m);

/// Inverse construction used by the round-trip identity: the general map
/// whose canonical reduction is exactly (x0, A, B).
Map31General rebuild_from_canonical(const PadicExact& x0, const PadicExact& A,
                                    const PadicExact& B);

}  // namespace padyn
