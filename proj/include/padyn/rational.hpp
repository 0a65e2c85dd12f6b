#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "padyn/errors.hpp"

namespace padyn {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const BigRat& x) {
  return boost::multiprecision::numerator(x);
}
inline BigInt rat_den(const BigRat& x) {
  return boost::multiprecision::denominator(x);
}

/// Parses the rational literal grammar: optional '-', decimal integer,
/// optional '/' followed by a positive decimal integer. No whitespace.
BigRat parse_rational(const std::string& text);

/// Formats a rational as "n" or "n/d" (lowest terms, d > 0).
std::string format_rational(const BigRat& x);

/// Number of bits of max(|num|, den); 0 for x = 0. Used by orbit guards.
std::size_t rational_bits(const BigRat& x);

/// x^k for integer k (k < 0 requires x != 0).
BigRat rat_pow(const BigRat& x, long long k);

/// Extended-gcd modular inverse of a modulo m (m >= 2, gcd(a, m) = 1).
BigInt mod_inverse(const BigInt& a, const BigInt& m);

/// Least non-negative residue of a rational with denominator coprime to m.
BigInt mod_residue(const BigRat& x, const BigInt& m);

/// Narrows an integer-valued rational to long long.
inline long long rat_to_ll(const BigRat& x) {
  if (rat_den(x) != 1) throw Error("expected an integer-valued rational");
  return rat_num(x).convert_to<long long>();
}

}  // namespace padyn
