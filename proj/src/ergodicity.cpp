#include "padyn/ergodicity.hpp"

#include <map>

namespace padyn {

std::string InvariantRadiusSet::to_string() const {
  if (kind == InvariantSetKind::EqualRootsCase)
    return "{r : 0 < r < p^" + alpha.exp_string() + "}";
  return "{r : 0 < r < p^" + beta.exp_string() + ", r != p^" +
         alpha.exp_string() + "}";
}

InvariantRadiusSet invariant_radius_set(const Map31& m) {
  InvariantSetKind kind = m.alpha() == m.beta()
                              ? InvariantSetKind::EqualRootsCase
                              : InvariantSetKind::DistinctRootsCase;
  return {kind, m.alpha(), m.beta()};
}

BigRat haar_measure(const NormExp& ball_radius, const NormExp& sphere_radius,
                    Prime p) {
  if (ball_radius.is_zero() || sphere_radius.is_zero() ||
      !ball_radius.is_integral() || !sphere_radius.is_integral())
    throw NonIntegralRadius();
  long long eb = rat_to_ll(ball_radius.exponent());
  long long es = rat_to_ll(sphere_radius.exponent());
  if (eb > es - 1) throw BallNotInSphere();
  // rho / (r (1 - 1/p)) = p^(eb - es) * p / (p - 1)
  BigRat ratio = rat_pow(BigRat(p.value()), eb - es);
  return ratio * BigRat(p.value(), p.value() - 1);
}

namespace {

PadicExact smallest_rep_on_sphere(const NormExp& r, Prime p) {
  if (!r.is_integral()) throw NonIntegralRadius();
  return PadicExact(rat_pow(BigRat(p.value()), -rat_to_ll(r.exponent())), p);
}

WitnessBall first_digit_ball_witness(const Map31& m, const NormExp& r) {
  Prime p = m.prime();
  NormExp radius(r.exponent() - 1);
  return {smallest_rep_on_sphere(r, p), radius, haar_measure(radius, r, p)};
}

WitnessBall rho_ball_witness(const Map31& m, const NormExp& r) {
  NormExp radius = rho(m, r);
  return {smallest_rep_on_sphere(r, m.prime()), radius,
          haar_measure(radius, r, m.prime())};
}

}  // namespace

ErgodicityVerdict theorem6_verdict(const Map31& m, const NormExp& r) {
  if (!radius_in_A(m, r)) throw NotInvariantRadius();
  if (!r.is_integral()) throw NonIntegralRadius();

  if (m.prime().value() >= 3) {
    return {VerdictKind::NotErgodic,
            "p >= 3: the first-digit ball is invariant with measure 1/(p-1)",
            r, first_digit_ball_witness(m, r), std::nullopt};
  }
  if (m.alpha() == m.beta()) {
    return {VerdictKind::NotErgodic,
            "p = 2, equal root norms: invariant ball of measure 2*rho(r)/r",
            r, rho_ball_witness(m, r), std::nullopt};
  }
  NormExp half_beta(m.beta().exponent() - 1);
  if (r != half_beta) {
    return {VerdictKind::NotErgodic,
            "p = 2, r != beta/2: invariant ball of measure 2*rho(r)/r", r,
            rho_ball_witness(m, r), std::nullopt};
  }
  return {VerdictKind::Undecided,
          "p = 2, r = beta/2: deferred to the unit-sphere reduction", r,
          std::nullopt, std::nullopt};
}

namespace {

int mod4(const BigRat& x) {
  return static_cast<int>(mod_residue(x, BigInt(4)).convert_to<long>());
}

BigRat coeff_sum(const std::vector<BigRat>& coeffs, bool odd_indices) {
  BigRat sum(0);
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if ((i % 2 == 1) == odd_indices) sum += coeffs[i];
  return sum;
}

bool is_2adic_integer(const BigRat& x) { return rat_den(x) % 2 != 0; }

// The four residue patterns (A1, A2, B1, B2) of the ergodicity criterion.
constexpr int kCases[4][4] = {
    {1, 2, 0, 1}, {3, 2, 0, 3}, {1, 0, 2, 1}, {3, 0, 2, 3}};

}  // namespace

MemicProfile memic_profile(const std::vector<BigRat>& num_coeffs,
                           const std::vector<BigRat>& den_coeffs) {
  for (const auto& c : num_coeffs)
    if (!is_2adic_integer(c))
      throw NotSelfMap("numerator coefficient " + format_rational(c) +
                       " is not a 2-adic integer");
  for (const auto& c : den_coeffs)
    if (!is_2adic_integer(c))
      throw NotSelfMap("denominator coefficient " + format_rational(c) +
                       " is not a 2-adic integer");

  BigRat a_odd = coeff_sum(num_coeffs, true);
  BigRat a_even = coeff_sum(num_coeffs, false);
  BigRat b_odd = coeff_sum(den_coeffs, true);
  BigRat b_even = coeff_sum(den_coeffs, false);

  // Value at 1 decides the parity of the value at every odd point, so
  // oddness here is exactly the self-map condition on the units.
  if (mod_residue(a_odd + a_even, BigInt(2)) != 1)
    throw NotSelfMap("numerator value at 1 is even");
  if (mod_residue(b_odd + b_even, BigInt(2)) != 1)
    throw NotSelfMap("denominator value at 1 is even");

  MemicProfile profile;
  profile.a1 = mod4(a_odd);
  profile.a2 = mod4(a_even);
  profile.b1 = mod4(b_odd);
  profile.b2 = mod4(b_even);

  auto matches = [](int a1, int a2, int b1, int b2, const int pattern[4]) {
    return a1 == pattern[0] && a2 == pattern[1] && b1 == pattern[2] &&
           b2 == pattern[3];
  };
  for (int i = 0; i < 4; ++i) {
    if (matches(profile.a1, profile.a2, profile.b1, profile.b2, kCases[i])) {
      profile.matched_case = i + 1;
      profile.interchanged = false;
      profile.ergodic = true;
      return profile;
    }
  }
  for (int i = 0; i < 4; ++i) {
    if (matches(profile.b1, profile.b2, profile.a1, profile.a2, kCases[i])) {
      profile.matched_case = i + 1;
      profile.interchanged = true;
      profile.ergodic = true;
      return profile;
    }
  }
  return profile;
}

RationalMapCoeffs scale_conjugate(const Map31& m, long long s) {
  BigRat ps = rat_pow(BigRat(m.prime().value()), s);
  BigRat a = m.a().value();
  BigRat b = m.b().value();
  return {{BigRat(0), b, a * ps, ps * ps}, {b, a * ps}};
}

RationalMapCoeffs clear_to_2adic(const RationalMapCoeffs& coeffs) {
  Prime two(2);
  long long min_v = 0;
  auto scan = [&](const std::vector<BigRat>& v) {
    for (const auto& c : v) {
      if (c == 0) continue;
      long long vc = int_valuation(rat_num(c), two) -
                     int_valuation(rat_den(c), two);
      min_v = std::min(min_v, vc);
    }
  };
  scan(coeffs.num);
  scan(coeffs.den);
  BigRat factor = rat_pow(BigRat(2), -min_v);
  RationalMapCoeffs out;
  for (const auto& c : coeffs.num) out.num.push_back(c * factor);
  for (const auto& c : coeffs.den) out.den.push_back(c * factor);
  return out;
}

ErgodicityVerdict theorem9_verdict(const Map31& m) {
  if (m.prime().value() != 2 ||
      radius_map_kind(m) != RadiusMapKind::PhiCase)
    throw WrongPrimeOrCase(
        "unit-sphere reduction requires p = 2 and alpha < beta");
  long long q = rat_to_ll(m.alpha().exponent());
  long long mexp = rat_to_ll(m.beta().exponent());
  NormExp half_beta(BigRat(mexp - 1));

  RationalMapCoeffs cleared =
      clear_to_2adic(scale_conjugate(m, 1 - mexp));
  if (q <= mexp - 2) {
    MemicProfile profile = memic_profile(cleared.num, cleared.den);
    if (profile.ergodic)
      return {VerdictKind::Ergodic,
              "4*alpha <= beta: unit-sphere conjugation matches an "
              "ergodicity criterion case",
              half_beta, std::nullopt, profile};
    return {VerdictKind::Undecided,
            "4*alpha <= beta but no criterion case matched", half_beta,
            std::nullopt, profile};
  }
  try {
    MemicProfile profile = memic_profile(cleared.num, cleared.den);
    if (profile.ergodic)
      return {VerdictKind::Ergodic,
              "unit-sphere conjugation matches an ergodicity criterion case",
              half_beta, std::nullopt, profile};
    return {VerdictKind::Undecided, "no criterion case matched", half_beta,
            std::nullopt, profile};
  } catch (const NotSelfMap& e) {
    return {VerdictKind::Undecided,
            std::string("4*alpha > beta: ") + e.what(), half_beta,
            std::nullopt, std::nullopt};
  }
}

ErgodicityVerdict ergodicity_verdict(const Map31& m, const NormExp& r) {
  ErgodicityVerdict v6 = theorem6_verdict(m, r);
  if (v6.kind != VerdictKind::Undecided) return v6;
  return theorem9_verdict(m);
}

FrequencyTable equidistribution_probe(const Map31& m, const NormExp& r,
                                      const PadicExact& x0,
                                      std::uint64_t iterations,
                                      std::size_t depth) {
  if (!radius_in_A(m, r)) throw NotInvariantRadius();
  if (!r.is_integral()) throw NonIntegralRadius();
  if (depth == 0) throw Error("probe depth must be >= 1");
  if (x0.norm() != r) throw Error("probe seed is not on the requested sphere");

  FrequencyTable table;
  table.depth = depth;
  Prime p = m.prime();
  BigInt cell_count = (p.big() - 1) * boost::multiprecision::pow(
                                          p.big(),
                                          static_cast<unsigned>(depth - 1));
  table.haar_weight = BigRat(1, cell_count);
  if (iterations == 0) return table;

  std::size_t precision = depth + 32;
  ApproxMap fm(m, precision + 64);
  PadicApprox x = digit_expand(x0, precision);
  long long v = x.valuation();

  std::map<BigInt, std::uint64_t> counts;
  for (std::uint64_t i = 0; i < iterations; ++i) {
    x = fm.eval(x);
    if (x.precision() < depth)
      throw InsufficientPrecision("probe iterate lost the binning digits");
    if (x.valuation() != v)
      throw Error("probe iterate left the invariant sphere");
    counts[x.unit_mod(depth)] += 1;
  }
  table.total = iterations;

  for (const PadicExact& rep : sphere_partition(r, depth, p)) {
    BigInt key = mod_residue(rep.unit_part(),
                             boost::multiprecision::pow(
                                 p.big(), static_cast<unsigned>(depth)));
    auto it = counts.find(key);
    table.cells.push_back({rep, it == counts.end() ? 0 : it->second});
  }
  return table;
}

}  // namespace padyn
