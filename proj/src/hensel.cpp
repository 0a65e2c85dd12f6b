#include "padyn/hensel.hpp"

#include <algorithm>

namespace padyn {
namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod_u64(result, base, m);
    base = mulmod_u64(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool is_qr_mod_p(std::uint64_t u, std::uint64_t p) {
  return powmod_u64(u % p, (p - 1) / 2, p) == 1;
}

// Tonelli-Shanks square root mod an odd prime; u must be a residue.
std::uint64_t sqrt_mod_p(std::uint64_t u, std::uint64_t p) {
  u %= p;
  if (p % 4 == 3) return powmod_u64(u, (p + 1) / 4, p);
  std::uint64_t q = p - 1;
  int s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  std::uint64_t z = 2;
  while (is_qr_mod_p(z, p)) ++z;
  std::uint64_t m = s;
  std::uint64_t c = powmod_u64(z, q, p);
  std::uint64_t t = powmod_u64(u, q, p);
  std::uint64_t r = powmod_u64(u, (q + 1) / 2, p);
  while (t != 1) {
    std::uint64_t i = 0, tt = t;
    while (tt != 1) {
      tt = mulmod_u64(tt, tt, p);
      ++i;
    }
    std::uint64_t b = c;
    for (std::uint64_t j = 0; j + i + 1 < m; ++j) b = mulmod_u64(b, b, p);
    m = i;
    c = mulmod_u64(b, b, p);
    t = mulmod_u64(t, c, p);
    r = mulmod_u64(r, b, p);
  }
  return r;
}

BigInt pow_p(const Prime& p, std::size_t k) {
  return boost::multiprecision::pow(p.big(), static_cast<unsigned>(k));
}

// Lifts y0^2 = u (mod p) to n digits by the Newton step y <- (y + u/y)/2.
BigInt lift_sqrt_odd_p(const BigRat& unit, std::uint64_t y0, const Prime& p,
                       std::size_t n) {
  BigInt u_full = mod_residue(unit, pow_p(p, n));
  BigInt y(y0);
  std::size_t k = 1;
  while (k < n) {
    k = std::min(2 * k, n);
    BigInt modulus = pow_p(p, k);
    BigInt inv_y = mod_inverse(y % modulus, modulus);
    BigInt inv2 = mod_inverse(BigInt(2), modulus);
    y = ((y + (u_full % modulus) * inv_y) % modulus * inv2) % modulus;
  }
  return y % pow_p(p, n);
}

// Digit-by-digit lift for p = 2: unit must be 1 mod 8; the returned y
// satisfies y^2 = u (mod 2^(n+1)), so its first n digits are a root's.
BigInt lift_sqrt_2(const BigRat& unit, std::size_t n) {
  Prime two(2);
  std::size_t work = n + 2;
  BigInt u = mod_residue(unit, pow_p(two, work));
  BigInt y(1);
  for (std::size_t m = 3; m <= n; ++m) {
    BigInt modulus = pow_p(two, m + 1);
    if ((y * y - u) % modulus != 0) y += pow_p(two, m - 1);
  }
  return y % pow_p(two, n);
}

std::optional<BigInt> exact_int_sqrt(const BigInt& n) {
  if (n < 0) return std::nullopt;
  BigInt s = boost::multiprecision::sqrt(n);
  if (s * s == n) return s;
  return std::nullopt;
}

}  // namespace

SqrtResult sqrt_qp(const PadicExact& x, std::size_t n) {
  if (x.is_zero()) throw ZeroInput("sqrt_qp");
  if (n == 0) throw Error("sqrt_qp: precision must be >= 1");
  const Prime& p = x.prime();
  long long v = rat_to_ll(x.valuation().finite());
  if (v % 2 != 0) throw NoRootInQp(NoRootReason::OddValuation);
  BigRat u = x.unit_part();

  // Exact rational root, when x is a square in Q.
  std::optional<PadicExact> exact;
  if (x.value() > 0) {
    auto sn = exact_int_sqrt(rat_num(x.value()));
    auto sd = exact_int_sqrt(rat_den(x.value()));
    if (sn && sd) exact = PadicExact(BigRat(*sn, *sd), p);
  }

  BigInt root_unit;
  if (p.value() == 2) {
    if (mod_residue(u, BigInt(8)) != 1)
      throw NoRootInQp(NoRootReason::NotOneMod8);
    root_unit = lift_sqrt_2(u, n);
  } else {
    std::uint64_t u0 = mod_residue(u, p.big()).convert_to<std::uint64_t>();
    if (!is_qr_mod_p(u0, p.value()))
      throw NoRootInQp(NoRootReason::NonResidue);
    root_unit = lift_sqrt_odd_p(u, sqrt_mod_p(u0, p.value()), p, n);
  }
  PadicApprox approx = PadicApprox::from_unit(p, v / 2, root_unit, n);
  if (exact) approx = digit_expand(*exact, n);
  return SqrtResult{approx, exact};
}

bool sqrt_exists_qp(const PadicExact& x) {
  if (x.is_zero()) return true;
  long long v = rat_to_ll(x.valuation().finite());
  if (v % 2 != 0) return false;
  BigRat u = x.unit_part();
  if (x.prime().value() == 2) return mod_residue(u, BigInt(8)) == 1;
  std::uint64_t u0 = mod_residue(u, x.prime().big()).convert_to<std::uint64_t>();
  return is_qr_mod_p(u0, x.prime().value());
}

}  // namespace padyn
