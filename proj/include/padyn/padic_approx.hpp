#pragma once

#include <cstdint>
#include <vector>

#include "padyn/padic_exact.hpp"

namespace padyn {

/// A truncated canonical digit expansion p^v * (d_0 + d_1 p + ... ) with
/// explicit precision: the value is known modulo p^(v + N) where N is the
/// number of known digits and d_0 != 0.
///
/// Precision is tracked pessimistically through arithmetic: relative
/// precision of a product or quotient is the minimum of the operands',
/// and additive cancellation reduces it by the number of annihilated
/// leading digits. A value indistinguishable from zero (all known digits
/// cancelled) keeps only its absolute precision bound; asking for its
/// valuation or norm raises InsufficientPrecision.
class PadicApprox {
 public:
  /// Expansion of a nonzero exact element to n digits (n >= 1).
  static PadicApprox from_exact(const PadicExact& x, std::size_t n);

  /// The value O(p^abs_prec): zero to full (absolute) precision.
  static PadicApprox zero_to(Prime prime, long long abs_prec);

  /// Raw constructor: value p^val * unit with unit coprime to p, known
  /// modulo p^(val + prec).
  static PadicApprox from_unit(Prime prime, long long val, BigInt unit,
                               std::size_t prec);

  const Prime& prime() const { return prime_; }

  bool indistinguishable_from_zero() const { return prec_ == 0; }

  /// Exact valuation of the represented value. Throws if all known
  /// digits are zero.
  long long valuation() const;
  NormExp norm() const { return NormExp(BigRat(-valuation())); }

  /// Relative precision: number of known digits.
  std::size_t precision() const { return prec_; }
  /// The value is known modulo p^abs_precision().
  long long abs_precision() const {
    return val_ + static_cast<long long>(prec_);
  }

  /// Canonical digits d_0 .. d_{N-1}, each in [0, p).
  std::vector<std::uint64_t> digits() const;
  const BigInt& unit() const { return unit_; }
  BigInt unit_mod(std::size_t k) const;

  /// p^val * unit as an exact rational representative.
  PadicExact representative() const;

  /// True when this expansion matches x digit-for-digit to its own
  /// precision (x nonzero).
  bool agrees_with(const PadicExact& x) const;

  PadicApprox operator-() const;
  friend PadicApprox operator+(const PadicApprox& a, const PadicApprox& b);
  friend PadicApprox operator-(const PadicApprox& a, const PadicApprox& b);
  friend PadicApprox operator*(const PadicApprox& a, const PadicApprox& b);
  friend PadicApprox operator/(const PadicApprox& a, const PadicApprox& b);

  std::string to_string() const;

 private:
  PadicApprox(Prime prime, long long val, BigInt unit, std::size_t prec)
      : prime_(prime), val_(val), unit_(std::move(unit)), prec_(prec) {}

  BigInt pow_p(std::size_t k) const {
    return boost::multiprecision::pow(prime_.big(), static_cast<unsigned>(k));
  }
  static void check_context(const PadicApprox& a, const PadicApprox& b) {
    if (a.prime_ != b.prime_) throw PrimeMismatch();
  }

  Prime prime_;
  long long val_;   // for the zero-ish state: the absolute precision bound
  BigInt unit_;     // in [0, p^prec), coprime to p; 0 in the zero-ish state
  std::size_t prec_;
};

/// Canonical digit expansion of a nonzero exact element (padic_core's
/// digit_expand operation).
PadicApprox digit_expand(const PadicExact& x, std::size_t n);

}  // namespace padyn
