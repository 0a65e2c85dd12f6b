#include <doctest.h>

#include "padyn/ergodicity.hpp"
#include "test_util.hpp"

using namespace padyn;
using testutil::make_rng;
using testutil::rand_int;
using testutil::rand_nonzero_rational;
using testutil::random_on_sphere;

namespace {

Prime two_p() { return Prime(2); }

Map31 example1_map() {
  return Map31(PadicExact(BigRat(5, 2), two_p()), PadicExact(1, two_p()));
}

Map31 example1_map_k(long long k) {
  return Map31(PadicExact(BigRat(4 * k + 1, 2), two_p()),
               PadicExact(k, two_p()));
}

NormExp exp_of(long long num, long long den = 1) {
  return NormExp(BigRat(num, den));
}

}  // namespace

TEST_CASE("invariant radius set descriptions") {
  Map31 phi = example1_map();
  InvariantRadiusSet a1 = invariant_radius_set(phi);
  CHECK(a1.kind == InvariantSetKind::DistinctRootsCase);
  CHECK(a1.contains(exp_of(-2)));
  CHECK(a1.contains(exp_of(0)));
  CHECK_FALSE(a1.contains(phi.alpha()));
  CHECK_FALSE(a1.contains(phi.beta()));
  CHECK_FALSE(a1.contains(exp_of(2)));

  Map31 zeta(PadicExact(2, two_p()), PadicExact(1, two_p()));
  InvariantRadiusSet a2 = invariant_radius_set(zeta);
  CHECK(a2.kind == InvariantSetKind::EqualRootsCase);
  CHECK(a2.contains(exp_of(-1)));
  CHECK_FALSE(a2.contains(exp_of(0)));
}

TEST_CASE("invariant set membership is sphere invariance") {
  auto rng = make_rng(401);
  std::vector<Map31> maps{
      example1_map(), Map31(PadicExact(2, two_p()), PadicExact(1, two_p())),
      Map31(PadicExact(1, Prime(3)), PadicExact(1, Prime(3))),
      Map31(PadicExact(5, Prime(5)), PadicExact(5, Prime(5)))};
  for (const Map31& m : maps) {
    InvariantRadiusSet set = invariant_radius_set(m);
    for (int e = -6; e <= 6; ++e) {
      NormExp r = exp_of(e);
      CHECK(set.contains(r) == radius_in_A(m, r));
    }
    // Rational exponents (C_p radii) agree too.
    for (int i = 0; i < 20; ++i) {
      NormExp r(BigRat(rand_int(rng, -12, 12), rand_int(rng, 1, 5)));
      CHECK(set.contains(r) == radius_in_A(m, r));
    }
  }
}

TEST_CASE("normalized Haar measure") {
  Prime five(5);
  // rho = r/p: mu = 1/(p-1).
  CHECK(haar_measure(exp_of(-1), exp_of(0), five) == BigRat(1, 4));
  CHECK(haar_measure(exp_of(-1), exp_of(0), two_p()) == BigRat(1));

  // Depth-d partition sums to 1.
  for (std::uint64_t pv : {2ULL, 3ULL, 5ULL}) {
    Prime p(pv);
    for (std::size_t d = 1; d <= 3; ++d) {
      auto cells = sphere_partition(exp_of(0), d, p);
      BigRat total =
          BigRat(cells.size()) *
          haar_measure(exp_of(-(long long)d), exp_of(0), p);
      CHECK(total == 1);
    }
  }

  CHECK_THROWS_AS(haar_measure(exp_of(0), exp_of(0), five), BallNotInSphere);
  CHECK_THROWS_AS(haar_measure(NormExp(BigRat(-1, 2)), exp_of(0), five),
                  NonIntegralRadius);
}

TEST_CASE("non-ergodicity for p >= 3 with a first-digit witness ball") {
  Prime five(5);
  Map31 m(PadicExact(5, five), PadicExact(5, five));
  NormExp r = exp_of(-1);  // 1/5 < alpha = 5^{-1/2}
  REQUIRE(radius_in_A(m, r));
  ErgodicityVerdict v = theorem6_verdict(m, r);
  CHECK(v.kind == VerdictKind::NotErgodic);
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->measure == BigRat(1, 4));
  CHECK(v.witness->radius == exp_of(-2));  // r/p
  CHECK(v.witness->center.norm() == r);

  // The witness ball really is invariant: sampled orbit stays inside.
  Ball ball{v.witness->center, v.witness->radius, BallKind::Closed};
  PadicExact x = v.witness->center;
  for (int i = 0; i < 6; ++i) {
    x = m.eval(x);
    CHECK(ball.contains(x));
  }
}

TEST_CASE("non-ergodicity for p = 2 off beta/2, undecided at beta/2") {
  Map31 phi = example1_map();  // alpha = 1/2, beta = 2

  // r = 1/4 != beta/2: invariant rho-ball of measure in (0,1).
  ErgodicityVerdict off = theorem6_verdict(phi, exp_of(-2));
  CHECK(off.kind == VerdictKind::NotErgodic);
  REQUIRE(off.witness.has_value());
  CHECK(off.witness->radius == rho(phi, exp_of(-2)));
  CHECK(off.witness->measure > 0);
  CHECK(off.witness->measure < 1);
  CHECK(off.witness->measure == BigRat(1, 8));

  // Equal root norms: not ergodic on every invariant sphere.
  Map31 zeta(PadicExact(2, two_p()), PadicExact(1, two_p()));
  ErgodicityVerdict eq = theorem6_verdict(zeta, exp_of(-1));
  CHECK(eq.kind == VerdictKind::NotErgodic);
  REQUIRE(eq.witness.has_value());
  CHECK(eq.witness->measure == BigRat(1, 2));

  // r = beta/2 = 1: deferred.
  ErgodicityVerdict half = theorem6_verdict(phi, exp_of(0));
  CHECK(half.kind == VerdictKind::Undecided);

  CHECK_THROWS_AS(theorem6_verdict(phi, phi.alpha()), NotInvariantRadius);
}

TEST_CASE("memic profile: cleared pair of the k-family") {
  // Numerator 2x^3 + (4k+1)x^2 + 2kx, denominator (4k+1)x + 2k.
  for (long long k : {1LL, 2LL, 3LL, 4LL}) {
    std::vector<BigRat> num{BigRat(0), BigRat(2 * k), BigRat(4 * k + 1),
                            BigRat(2)};
    std::vector<BigRat> den{BigRat(2 * k), BigRat(4 * k + 1)};
    MemicProfile p = memic_profile(num, den);
    CHECK(p.a1 == (2 * k + 2) % 4);
    CHECK(p.a2 == (4 * k + 1) % 4);
    CHECK(p.b1 == (4 * k + 1) % 4);
    CHECK(p.b2 == (2 * k) % 4);
    CHECK(p.ergodic);
    CHECK(p.interchanged);
    REQUIRE(p.matched_case.has_value());
    CHECK(*p.matched_case == (k % 2 == 1 ? 1 : 3));
  }
}

TEST_CASE("memic profile: identity map matches no case") {
  MemicProfile p = memic_profile({BigRat(0), BigRat(1)}, {BigRat(1)});
  CHECK(p.a1 == 1);
  CHECK(p.a2 == 0);
  CHECK(p.b1 == 0);
  CHECK(p.b2 == 1);
  CHECK_FALSE(p.ergodic);
  CHECK_FALSE(p.matched_case.has_value());
}

TEST_CASE("memic profile rejects non-self-maps") {
  // Even value at 1.
  CHECK_THROWS_AS(memic_profile({BigRat(0), BigRat(2)}, {BigRat(1)}),
                  NotSelfMap);
  CHECK_THROWS_AS(memic_profile({BigRat(0), BigRat(1)}, {BigRat(2)}),
                  NotSelfMap);
  // Coefficient with even denominator is not a 2-adic integer.
  CHECK_THROWS_AS(memic_profile({BigRat(0), BigRat(1, 2)}, {BigRat(1)}),
                  NotSelfMap);
}

TEST_CASE("memic parity sanity: sums against values at 1") {
  auto rng = make_rng(402);
  int accepted = 0;
  for (int trial = 0; trial < 400 && accepted < 60; ++trial) {
    std::vector<BigRat> num, den;
    int dn = rand_int(rng, 1, 4), dd = rand_int(rng, 1, 3);
    for (int i = 0; i <= dn; ++i)
      num.push_back(BigRat(rand_int(rng, -9, 9), 2 * rand_int(rng, 0, 3) + 1));
    for (int i = 0; i <= dd; ++i)
      den.push_back(BigRat(rand_int(rng, -9, 9), 2 * rand_int(rng, 0, 3) + 1));
    try {
      MemicProfile p = memic_profile(num, den);
      BigRat num_at_1(0), den_at_1(0);
      for (const auto& c : num) num_at_1 += c;
      for (const auto& c : den) den_at_1 += c;
      CHECK(mod_residue(num_at_1, BigInt(4)) == (p.a1 + p.a2) % 4);
      CHECK(mod_residue(den_at_1, BigInt(4)) == (p.b1 + p.b2) % 4);
      ++accepted;
    } catch (const NotSelfMap&) {
    }
  }
  CHECK(accepted == 60);
}

TEST_CASE("scaling conjugation: s = 0 is the identity") {
  Map31 m = example1_map();
  RationalMapCoeffs c = scale_conjugate(m, 0);
  CHECK(c.num == std::vector<BigRat>{BigRat(0), BigRat(1), BigRat(5, 2),
                                     BigRat(1)});
  CHECK(c.den == std::vector<BigRat>{BigRat(1), BigRat(5, 2)});

  // Clearing multiplies by 2: exactly the k = 1 family pair.
  RationalMapCoeffs cleared = clear_to_2adic(c);
  CHECK(cleared.num ==
        std::vector<BigRat>{BigRat(0), BigRat(2), BigRat(5), BigRat(2)});
  CHECK(cleared.den == std::vector<BigRat>{BigRat(2), BigRat(5)});
}

TEST_CASE("scaling conjugation maps spheres and preserves the map") {
  // g^{-1}(f(g(t))) evaluated directly equals the coefficient form.
  Map31 m = example1_map();
  auto rng = make_rng(403);
  for (long long s : {-2LL, -1LL, 0LL, 1LL, 2LL}) {
    RationalMapCoeffs c = scale_conjugate(m, s);
    BigRat ps = rat_pow(BigRat(2), s);
    for (int i = 0; i < 10; ++i) {
      BigRat t = rand_nonzero_rational(rng, 50, 20);
      BigRat x = ps * t;
      if ((m.a().value() * x + m.b().value()) == 0) continue;
      BigRat direct = m.eval(PadicExact(x, two_p())).value() / ps;
      BigRat num = c.num[3] * t * t * t + c.num[2] * t * t + c.num[1] * t;
      BigRat den = c.den[1] * t + c.den[0];
      CHECK(direct == num / den);
    }
  }
}

TEST_CASE("unit-sphere reduction coefficient norms for 4 alpha <= beta") {
  // a = 1/8, b = 1/16: alpha = 2 (q = 1), beta = 8 (m = 3), 4 alpha = beta.
  Map31 m(PadicExact(BigRat(1, 8), two_p()),
          PadicExact(BigRat(1, 16), two_p()));
  CHECK(m.alpha() == exp_of(1));
  CHECK(m.beta() == exp_of(3));

  RationalMapCoeffs cleared = clear_to_2adic(scale_conjugate(m, 1 - 3));
  // Numerator norms: |2 t^3| = 1/2, |2^m a t^2| = 1, |2^{2m-1} b t| <= 1/2.
  auto norm2 = [](const BigRat& x) {
    return PadicExact(x, Prime(2)).norm();
  };
  CHECK(cleared.num[3] == 2);
  CHECK(norm2(cleared.num[3]) == exp_of(-1));
  CHECK(norm2(cleared.num[2]) == exp_of(0));
  CHECK(norm2(cleared.num[1]) <= exp_of(-1));
  CHECK(norm2(cleared.den[1]) == exp_of(0));
  CHECK(norm2(cleared.den[0]) <= exp_of(-1));

  ErgodicityVerdict v = theorem9_verdict(m);
  CHECK(v.kind == VerdictKind::Ergodic);
  CHECK(v.sphere == exp_of(2));  // S_{beta/2} = S_4
  REQUIRE(v.memic.has_value());
  CHECK(v.memic->ergodic);
}

TEST_CASE("unit-sphere reduction: worked family and wrong-case errors") {
  ErgodicityVerdict v = theorem9_verdict(example1_map());
  CHECK(v.kind == VerdictKind::Ergodic);
  CHECK(v.sphere == exp_of(0));  // beta/2 = 1
  REQUIRE(v.memic.has_value());
  CHECK(v.memic->interchanged);
  CHECK(*v.memic->matched_case == 1);

  Prime three(3);
  CHECK_THROWS_AS(theorem9_verdict(Map31(PadicExact(BigRat(1, 3), three),
                                         PadicExact(1, three))),
                  WrongPrimeOrCase);
  CHECK_THROWS_AS(theorem9_verdict(Map31(PadicExact(2, two_p()),
                                         PadicExact(1, two_p()))),
                  WrongPrimeOrCase);
}

TEST_CASE("4 alpha > beta stays undecided: the cleared pair is no self-map") {
  // a = 1/2, b = 1/2: alpha = 1, beta = 2, q = m - 1 = 0.
  Map31 m(PadicExact(BigRat(1, 2), two_p()),
          PadicExact(BigRat(1, 2), two_p()));
  CHECK(m.alpha() == exp_of(0));
  CHECK(m.beta() == exp_of(1));
  ErgodicityVerdict v = theorem9_verdict(m);
  CHECK(v.kind == VerdictKind::Undecided);
  CHECK_FALSE(v.memic.has_value());
}

TEST_CASE("combined verdict flow on the worked family") {
  for (long long k : {1LL, 2LL, 3LL, 4LL}) {
    Map31 m = example1_map_k(k);
    ErgodicityVerdict v = ergodicity_verdict(m, exp_of(0));
    CHECK(v.kind == VerdictKind::Ergodic);
    REQUIRE(v.memic.has_value());
    CHECK(v.memic->interchanged);
  }
  // p = 5: immediately not ergodic.
  Prime five(5);
  Map31 m5(PadicExact(5, five), PadicExact(5, five));
  ErgodicityVerdict v5 = ergodicity_verdict(m5, exp_of(-1));
  CHECK(v5.kind == VerdictKind::NotErgodic);
}

TEST_CASE("profile is stable under unit scalings with equal mod-4 sums") {
  RationalMapCoeffs base{{BigRat(0), BigRat(2), BigRat(5), BigRat(2)},
                         {BigRat(2), BigRat(5)}};
  MemicProfile p0 = memic_profile(base.num, base.den);
  // Multiplying numerator and denominator by 5 = 1 (mod 4) changes
  // nothing in the residues or the matched case.
  RationalMapCoeffs scaled;
  for (const auto& c : base.num) scaled.num.push_back(c * 5);
  for (const auto& c : base.den) scaled.den.push_back(c * 5);
  MemicProfile p1 = memic_profile(scaled.num, scaled.den);
  CHECK(p0.a1 == p1.a1);
  CHECK(p0.a2 == p1.a2);
  CHECK(p0.b1 == p1.b1);
  CHECK(p0.b2 == p1.b2);
  CHECK(p0.ergodic == p1.ergodic);
  CHECK(p0.matched_case == p1.matched_case);
  CHECK(p0.interchanged == p1.interchanged);
}

TEST_CASE("measure preservation on invariant spheres") {
  Map31 m = example1_map();
  auto rng = make_rng(404);
  NormExp r = exp_of(0);
  for (int i = 0; i < 20; ++i) {
    PadicExact c = random_on_sphere(rng, two_p(), 0);
    NormExp ball = exp_of(-rand_int(rng, 1, 4));
    PadicExact fc = m.eval(c);
    CHECK(fc.norm() == r);  // image center stays on the sphere
    // Image ball has the same radius (isometry), hence equal measure.
    CHECK(haar_measure(ball, r, two_p()) ==
          haar_measure(ball, fc.norm(), two_p()));
  }
}

TEST_CASE("probe: non-ergodic sphere confines the orbit to one cell") {
  Prime five(5);
  Map31 m(PadicExact(1, five), PadicExact(1, five));  // eta, A = (0, 1)
  NormExp r = exp_of(-1);
  PadicExact seed(5, five);
  FrequencyTable t = equidistribution_probe(m, r, seed, 500, 1);
  CHECK(t.total == 500);
  REQUIRE(t.cells.size() == 4);
  std::uint64_t visited_cells = 0;
  for (const FrequencyCell& c : t.cells) {
    if (c.count > 0) {
      ++visited_cells;
      CHECK(c.count == 500);
      CHECK(c.rep.value() == 5);  // first digit 1, same as the seed
    }
  }
  CHECK(visited_cells == 1);
}

TEST_CASE("probe: zero iterations give an empty table") {
  Map31 m = example1_map();
  FrequencyTable t = equidistribution_probe(
      m, exp_of(0), PadicExact(1, two_p()), 0, 4);
  CHECK(t.total == 0);
  CHECK(t.cells.empty());
  CHECK(t.haar_weight == BigRat(1, 8));
}

TEST_CASE("probe: ergodic sphere visits every cell") {
  Map31 m = example1_map();
  FrequencyTable t = equidistribution_probe(
      m, exp_of(0), PadicExact(1, two_p()), 1 << 12, 4);
  REQUIRE(t.cells.size() == 8);
  CHECK(t.haar_weight == BigRat(1, 8));
  std::uint64_t total = 0;
  for (const FrequencyCell& c : t.cells) {
    CHECK(c.count > 0);
    total += c.count;
  }
  CHECK(total == t.total);
}

TEST_CASE("probe rejects bad inputs") {
  Map31 m = example1_map();
  CHECK_THROWS_AS(equidistribution_probe(m, m.alpha(),
                                         PadicExact(2, two_p()), 10, 1),
                  NotInvariantRadius);
  CHECK_THROWS_AS(equidistribution_probe(m, exp_of(0),
                                         PadicExact(2, two_p()), 10, 1),
                  Error);  // seed not on the sphere
}
