#include "padyn/map31.hpp"

namespace padyn {

namespace {
void check_same_prime(const PadicExact& x, const PadicExact& y) {
  if (x.prime() != y.prime()) throw PrimeMismatch();
}
}  // namespace

Map31General::Map31General(PadicExact a_in, PadicExact b_in, PadicExact c_in,
                           PadicExact d_in, PadicExact e_in)
    : a(std::move(a_in)),
      b(std::move(b_in)),
      c(std::move(c_in)),
      d(std::move(d_in)),
      e(std::move(e_in)) {
  check_same_prime(a, b);
  check_same_prime(a, c);
  check_same_prime(a, d);
  check_same_prime(a, e);
  if (d.is_zero()) throw Error("general (3,1) map requires d != 0");
}

PadicExact Map31General::eval(const PadicExact& x) const {
  PadicExact den = d * x + e;
  if (den.is_zero()) throw SingularPoint();
  return (x * x * x + a * x * x + b * x + c) / den;
}

Poly Map31General::fixed_point_cubic() const {
  return Poly({c.value(), b.value() - e.value(), a.value() - d.value(),
               BigRat(1)});
}

Map31::Map31(PadicExact a, PadicExact b)
    : a_(std::move(a)),
      b_(std::move(b)),
      x_hat_(PadicExact(0, a_.prime())),
      disc_(PadicExact(0, a_.prime())),
      delta_(NormExp::zero()) {
  check_same_prime(a_, b_);
  if (a_.is_zero() || b_.is_zero()) throw DegenerateAB();
  x_hat_ = -(b_ / a_);
  disc_ = a_ * a_ - PadicExact(4, prime()) * b_;
  delta_ = a_.norm();
  auto norms = root_norms_newton(a_, b_);
  alpha_ = norms.first;
  beta_ = norms.second;
}

PadicExact Map31::eval(const PadicExact& x) const {
  PadicExact den = a_ * x + b_;
  if (den.is_zero()) throw SingularPoint();
  return (x * x * x + a_ * x * x + b_ * x) / den;
}

NormExp Map31::norm_f(const PadicExact& x) const {
  PadicExact den = a_ * x + b_;
  if (den.is_zero()) throw SingularPoint();
  PadicExact quad = x * x + a_ * x + b_;
  return x.norm() * quad.norm() / den.norm();
}

PadicExact Map31::f_prime(const PadicExact& x) const {
  PadicExact den = a_ * x + b_;
  if (den.is_zero()) throw SingularPoint();
  PadicExact two(2, prime()), three(3, prime());
  PadicExact num = two * a_ * x * x * x +
                   (three * b_ + a_ * a_) * x * x +
                   two * a_ * b_ * x + b_ * b_;
  return num / (den * den);
}

FixedPointStructure fixed_point_structure(const Map31General& m) {
  const Prime& p = m.prime();
  Poly cubic = m.fixed_point_cubic();

  // Triple-root candidate from 3 x0 = d - a, checked against the
  // remaining coefficient identities.
  BigRat x0 = (m.d.value() - m.a.value()) / 3;
  if (3 * x0 * x0 == m.b.value() - m.e.value() &&
      x0 * x0 * x0 == -m.c.value()) {
    return {FixedPointKind::TripleRoot, {PadicExact(x0, p)}, {}};
  }

  Poly g = Poly::gcd(cubic, cubic.derivative());
  if (g.degree() == 1) {
    // Double root from the gcd; the simple root from the root sum.
    BigRat dbl = -g.coeff(0) / g.coeff(1);
    BigRat sum = -(m.a.value() - m.d.value());
    BigRat simple = sum - 2 * dbl;
    return {FixedPointKind::DoubleAndSimple,
            {PadicExact(dbl, p), PadicExact(simple, p)},
            {}};
  }

  // Square-free cubic: three distinct roots; list the rational ones and
  // report whatever does not factor over Q symbolically.
  FixedPointStructure out{FixedPointKind::ThreeDistinct, {}, {}};
  RationalRoots rr = rational_roots(cubic);
  Poly rest = cubic;
  for (const BigRat& r : rr.roots) {
    out.roots.push_back(PadicExact(r, p));
    rest = Poly::divmod(rest, Poly({-r, BigRat(1)})).first;
  }
  if (rest.degree() >= 1) out.symbolic_factors.push_back(rest);
  return out;
}

CanonicalReduction reduce_to_canonical(const Map31General& m) {
  FixedPointStructure s = fixed_point_structure(m);
  if (s.kind != FixedPointKind::TripleRoot) throw NotUniqueFixedPoint();
  const PadicExact& x0 = s.roots.front();
  PadicExact A = m.d;
  PadicExact B = m.d * x0 + m.e;
  if ((A * B).is_zero()) throw DegenerateAB();
  return {x0, Map31(A, B)};
}

Map31General rebuild_from_canonical(const PadicExact& x0, const PadicExact& A,
                                    const PadicExact& B) {
  PadicExact three(3, x0.prime());
  PadicExact a = A - three * x0;
  PadicExact b = B + three * x0 * x0 - A * x0;
  PadicExact c = -(x0 * x0 * x0);
  PadicExact d = A;
  PadicExact e = B - A * x0;
  return Map31General(a, b, c, d, e);
}

}  // namespace padyn
