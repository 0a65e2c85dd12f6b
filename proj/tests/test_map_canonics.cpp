#include <doctest.h>

#include "padyn/map31.hpp"
#include "test_util.hpp"

using namespace padyn;
using testutil::make_rng;
using testutil::rand_int;
using testutil::rand_nonzero_rational;

namespace {

Map31General general_from(Prime p, long long a, long long b, long long c,
                          long long d, long long e) {
  return Map31General(PadicExact(a, p), PadicExact(b, p), PadicExact(c, p),
                      PadicExact(d, p), PadicExact(e, p));
}

Map31 example2_map() {
  Prime two(2);
  return Map31(PadicExact(BigRat(-9, 10), two),
               PadicExact(BigRat(1, 10), two));
}

Map31 example1_map() {
  // a = 2k + 1/2, b = k at k = 1.
  Prime two(2);
  return Map31(PadicExact(BigRat(5, 2), two), PadicExact(1, two));
}

}  // namespace

TEST_CASE("fixed point structure: canonical form has the triple root 0") {
  Prime two(2);
  auto s = fixed_point_structure(
      general_from(two, 7, 3, 0, 7, 3));  // (A, B, 0, A, B)
  CHECK(s.kind == FixedPointKind::TripleRoot);
  CHECK(s.roots.front().value() == 0);
}

TEST_CASE("fixed point structure: built from x0 = 2, A = 1, B = 1") {
  Prime two(2);
  // Inverse-substitution oracle: rebuild the general map from the
  // canonical data and check it is the expected coefficient tuple.
  Map31General m = rebuild_from_canonical(PadicExact(2, two),
                                          PadicExact(1, two),
                                          PadicExact(1, two));
  CHECK(m.a.value() == -5);
  CHECK(m.b.value() == 11);
  CHECK(m.c.value() == -8);
  CHECK(m.d.value() == 1);
  CHECK(m.e.value() == -1);

  auto s = fixed_point_structure(m);
  CHECK(s.kind == FixedPointKind::TripleRoot);
  CHECK(s.roots.front().value() == 2);
}

TEST_CASE("fixed point structure: x^3 - x has three distinct roots") {
  Prime two(2);
  auto s = fixed_point_structure(general_from(two, 1, 0, 0, 1, 1));
  CHECK(s.kind == FixedPointKind::ThreeDistinct);
  REQUIRE(s.roots.size() == 3);
  CHECK(s.roots[0].value() == -1);
  CHECK(s.roots[1].value() == 0);
  CHECK(s.roots[2].value() == 1);
  CHECK(s.symbolic_factors.empty());
}

TEST_CASE("fixed point structure: double root detected via the gcd") {
  Prime two(2);
  // Cubic (x-1)^2 (x-3) = x^3 - 5x^2 + 7x - 3: pick coefficients with
  // a - d = -5, b - e = 7, c = -3.
  auto s = fixed_point_structure(general_from(two, -4, 8, -3, 1, 1));
  CHECK(s.kind == FixedPointKind::DoubleAndSimple);
  REQUIRE(s.roots.size() == 2);
  CHECK(s.roots[0].value() == 1);
  CHECK(s.roots[1].value() == 3);
}

TEST_CASE("fixed point structure: irrational roots reported symbolically") {
  Prime two(2);
  // x^3 - 2 is irreducible over Q.
  auto s = fixed_point_structure(general_from(two, 1, 0, -2, 1, 0));
  CHECK(s.kind == FixedPointKind::ThreeDistinct);
  CHECK(s.roots.empty());
  REQUIRE(s.symbolic_factors.size() == 1);
  CHECK(s.symbolic_factors.front().degree() == 3);
}

TEST_CASE("reduce_to_canonical: worked example and errors") {
  Prime two(2);
  auto red = reduce_to_canonical(general_from(two, -5, 11, -8, 1, -1));
  CHECK(red.x0.value() == 2);
  CHECK(red.map.a().value() == 1);
  CHECK(red.map.b().value() == 1);

  // Already canonical: x0 = 0, (A, B) unchanged.
  auto red2 = reduce_to_canonical(general_from(two, 7, 3, 0, 7, 3));
  CHECK(red2.x0.value() == 0);
  CHECK(red2.map.a().value() == 7);
  CHECK(red2.map.b().value() == 3);

  CHECK_THROWS_AS(reduce_to_canonical(general_from(two, 1, 0, 0, 1, 1)),
                  NotUniqueFixedPoint);

  // B = d x0 + e = 0: triple root exists but the conjugate degenerates.
  Map31General degenerate = rebuild_from_canonical(
      PadicExact(1, two), PadicExact(1, two), PadicExact(0, two));
  CHECK_THROWS_AS(reduce_to_canonical(degenerate), DegenerateAB);
}

TEST_CASE("conjugation round-trip is the identity on canonical data") {
  auto rng = make_rng(201);
  for (std::uint64_t pv : {2ULL, 3ULL, 5ULL}) {
    Prime p(pv);
    for (int i = 0; i < 100; ++i) {
      PadicExact x0(rand_nonzero_rational(rng, 40, 12), p);
      PadicExact A(rand_nonzero_rational(rng, 40, 12), p);
      PadicExact B(rand_nonzero_rational(rng, 40, 12), p);
      Map31General rebuilt = rebuild_from_canonical(x0, A, B);
      auto red = reduce_to_canonical(rebuilt);
      CHECK(red.x0 == x0);
      CHECK(red.map.a() == A);
      CHECK(red.map.b() == B);
    }
  }
}

TEST_CASE("conjugation is a topological conjugacy pointwise") {
  // h(t) = t + x0 satisfies f(h(t)) = h(g(t)) for the canonical g.
  auto rng = make_rng(202);
  Prime p(3);
  PadicExact x0(BigRat(2, 5), p), A(BigRat(-3, 2), p), B(BigRat(7, 4), p);
  Map31General general = rebuild_from_canonical(x0, A, B);
  Map31 canonical = reduce_to_canonical(general).map;
  for (int i = 0; i < 50; ++i) {
    PadicExact t(rand_nonzero_rational(rng, 60, 20), p);
    if ((canonical.a() * t + canonical.b()).is_zero()) continue;
    PadicExact lhs = general.eval(t + x0);
    PadicExact rhs = canonical.eval(t) + x0;
    CHECK(lhs == rhs);
  }
}

TEST_CASE("canonical map: fixed point, singular point, Example 2 cycle") {
  Map31 m = example2_map();
  Prime two(2);

  CHECK(m.eval(PadicExact(0, two)).value() == 0);
  CHECK(m.x_hat().value() == BigRat(1, 9));
  CHECK_THROWS_AS(m.eval(m.x_hat()), SingularPoint);

  PadicExact tenth(BigRat(1, 10), two), fifth(BigRat(1, 5), two);
  CHECK(m.eval(tenth) == fifth);
  CHECK(m.eval(fifth) == tenth);
}

TEST_CASE("canonical map constructor rejects a*b = 0") {
  Prime two(2);
  CHECK_THROWS_AS(Map31(PadicExact(0, two), PadicExact(1, two)), DegenerateAB);
  CHECK_THROWS_AS(Map31(PadicExact(1, two), PadicExact(0, two)), DegenerateAB);
}

TEST_CASE("norm_f agrees with the norm of the exact evaluation") {
  auto rng = make_rng(203);
  std::vector<Map31> maps;
  maps.push_back(example2_map());
  maps.push_back(example1_map());
  Prime three(3), five(5);
  maps.push_back(Map31(PadicExact(2, Prime(2)), PadicExact(1, Prime(2))));
  maps.push_back(Map31(PadicExact(1, three), PadicExact(1, three)));
  maps.push_back(Map31(PadicExact(BigRat(1, 5), five), PadicExact(1, five)));
  for (const Map31& m : maps) {
    for (int i = 0; i < 80; ++i) {
      PadicExact x(rand_nonzero_rational(rng, 200, 200), m.prime());
      if (x == m.x_hat()) continue;
      CHECK(m.norm_f(x) == m.eval(x).norm());
    }
    CHECK(m.norm_f(PadicExact(0, m.prime())).is_zero());
  }
}

TEST_CASE("norm_f below alpha is the identity on norms") {
  Map31 m = example2_map();  // alpha = 1
  Prime two(2);
  auto rng = make_rng(204);
  for (int i = 0; i < 40; ++i) {
    // |x| = 1/2 or 1/4 < alpha = 1.
    PadicExact x = testutil::random_on_sphere(rng, two, rand_int(rng, 1, 2));
    CHECK(m.norm_f(x) == x.norm());
  }
}

TEST_CASE("derivative: f'(0) = 1 and |f'| = 1 on invariant spheres") {
  Prime two(2);
  Map31 m = example1_map();
  CHECK(m.f_prime(PadicExact(0, two)).value() == 1);
  CHECK(m.f_prime_norm(PadicExact(3, two)) == NormExp::one());
}

TEST_CASE("derivative quotient matches the symbolic derivative oracle") {
  auto rng = make_rng(205);
  for (std::uint64_t pv : {2ULL, 5ULL}) {
    Prime p(pv);
    for (int i = 0; i < 40; ++i) {
      BigRat av = rand_nonzero_rational(rng, 60, 20);
      BigRat bv = rand_nonzero_rational(rng, 60, 20);
      Map31 m(PadicExact(av, p), PadicExact(bv, p));
      // Oracle: generic quotient rule (N' D - N D') / D^2 with
      // polynomial arithmetic, evaluated exactly.
      Poly N({BigRat(0), bv, av, BigRat(1)});
      Poly D({bv, av});
      Poly numerator = N.derivative() * D - N * D.derivative();
      for (int j = 0; j < 5; ++j) {
        PadicExact x(rand_nonzero_rational(rng, 80, 30), p);
        if (x == m.x_hat()) continue;
        BigRat dv = D.eval(x.value());
        BigRat expected = numerator.eval(x.value()) / (dv * dv);
        CHECK(m.f_prime(x).value() == expected);
        CHECK(m.f_prime_norm(x) == PadicExact(expected, p).norm());
      }
    }
  }
}

TEST_CASE("fixed-point cubic of any canonical map is x^3") {
  auto rng = make_rng(206);
  Prime p(5);
  for (int i = 0; i < 30; ++i) {
    PadicExact A(rand_nonzero_rational(rng, 50, 10), p);
    PadicExact B(rand_nonzero_rational(rng, 50, 10), p);
    Map31General as_general(A, B, PadicExact(0, p), A, B);
    Poly cubic = as_general.fixed_point_cubic();
    CHECK(cubic == Poly({BigRat(0), BigRat(0), BigRat(0), BigRat(1)}));
    CHECK(Map31(A, B).eval(PadicExact(0, p)).value() == 0);
  }
}
