#pragma once

#include <string>

#include "padyn/norm_exp.hpp"
#include "padyn/prime.hpp"
#include "padyn/rational.hpp"

namespace padyn {

/// Multiplicity of p in a nonzero integer.
long long int_valuation(BigInt n, const Prime& p);

/// An element of Q_p represented as an exact rational in lowest terms
/// together with its prime context. The valuation v_p(num) - v_p(den)
/// is exact; valuation of zero is the +infinity sentinel.
///
/// Immutable after construction; all operations are pure.
class PadicExact {
 public:
  PadicExact(BigRat value, Prime prime)
      : value_(std::move(value)), prime_(prime) {}
  PadicExact(long long value, Prime prime) : value_(value), prime_(prime) {}

  static PadicExact parse(const std::string& literal, Prime prime) {
    return PadicExact(parse_rational(literal), prime);
  }

  const BigRat& value() const { return value_; }
  const Prime& prime() const { return prime_; }
  bool is_zero() const { return value_ == 0; }

  Valuation valuation() const;
  NormExp norm() const { return NormExp::from_valuation(valuation()); }

  /// The unit part u with x = p^v * u (x nonzero); num and den of u
  /// are coprime to p.
  BigRat unit_part() const;

  PadicExact operator-() const { return PadicExact(-value_, prime_); }

  friend PadicExact operator+(const PadicExact& a, const PadicExact& b) {
    check_context(a, b);
    return PadicExact(a.value_ + b.value_, a.prime_);
  }
  friend PadicExact operator-(const PadicExact& a, const PadicExact& b) {
    check_context(a, b);
    return PadicExact(a.value_ - b.value_, a.prime_);
  }
  friend PadicExact operator*(const PadicExact& a, const PadicExact& b) {
    check_context(a, b);
    return PadicExact(a.value_ * b.value_, a.prime_);
  }
  friend PadicExact operator/(const PadicExact& a, const PadicExact& b) {
    check_context(a, b);
    if (b.is_zero()) throw DivisionByZero();
    return PadicExact(a.value_ / b.value_, a.prime_);
  }

  friend bool operator==(const PadicExact& a, const PadicExact& b) {
    check_context(a, b);
    return a.value_ == b.value_;
  }
  friend bool operator!=(const PadicExact& a, const PadicExact& b) {
    return !(a == b);
  }

  std::string to_string() const { return format_rational(value_); }

 private:
  static void check_context(const PadicExact& a, const PadicExact& b) {
    if (a.prime_ != b.prime_) throw PrimeMismatch();
  }

  BigRat value_;
  Prime prime_;
};

/// Ball and sphere descriptors around a center point. Containment is
/// decided exactly from valuations and radius exponents.
enum class BallKind { Open, Closed, Sphere };

struct Ball {
  PadicExact center;
  NormExp radius;  // > 0
  BallKind kind;

  bool contains(const PadicExact& x) const {
    NormExp d = (x - center).norm();
    switch (kind) {
      case BallKind::Open:
        return d < radius;
      case BallKind::Closed:
        return d <= radius;
      case BallKind::Sphere:
        return d == radius;
    }
    return false;
  }
};

}  // namespace padyn
