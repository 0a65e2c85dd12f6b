#pragma once

#include <string>

#include "padyn/errors.hpp"
#include "padyn/rational.hpp"

namespace padyn {

/// p-adic valuation: a rational number or the +infinity sentinel for 0.
/// Ordered with +infinity above every rational.
class Valuation {
 public:
  Valuation() : infinite_(true) {}
  explicit Valuation(BigRat v) : infinite_(false), v_(std::move(v)) {}
  static Valuation infinity() { return Valuation(); }

  bool is_infinite() const { return infinite_; }
  const BigRat& finite() const {
    if (infinite_) throw Error("valuation is +infinity");
    return v_;
  }

  friend bool operator==(const Valuation& a, const Valuation& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.v_ == b.v_;
  }
  friend bool operator!=(const Valuation& a, const Valuation& b) {
    return !(a == b);
  }
  friend bool operator<(const Valuation& a, const Valuation& b) {
    if (a.infinite_) return false;
    if (b.infinite_) return true;
    return a.v_ < b.v_;
  }
  friend bool operator<=(const Valuation& a, const Valuation& b) {
    return a < b || a == b;
  }

  std::string to_string() const {
    return infinite_ ? "inf" : format_rational(v_);
  }

 private:
  bool infinite_;
  BigRat v_;
};

/// A p-adic norm value p^e held symbolically by its rational exponent e.
/// The norm of zero is the NEG_INF sentinel, below every finite norm.
/// Rational non-integer exponents appear only as C_p radii.
class NormExp {
 public:
  NormExp() : zero_(true) {}
  explicit NormExp(BigRat e) : zero_(false), e_(std::move(e)) {}
  explicit NormExp(long long e) : zero_(false), e_(e) {}
  static NormExp zero() { return NormExp(); }
  static NormExp one() { return NormExp(BigRat(0)); }

  static NormExp from_valuation(const Valuation& v) {
    return v.is_infinite() ? zero() : NormExp(-v.finite());
  }
  Valuation to_valuation() const {
    return zero_ ? Valuation::infinity() : Valuation(-e_);
  }

  bool is_zero() const { return zero_; }
  const BigRat& exponent() const {
    if (zero_) throw Error("norm of zero has no finite exponent");
    return e_;
  }

  /// Exponent is an integer (a Q_p radius, an integral power of p).
  bool is_integral() const { return !zero_ && rat_den(e_) == 1; }

  friend NormExp operator*(const NormExp& a, const NormExp& b) {
    if (a.zero_ || b.zero_) return zero();
    return NormExp(a.e_ + b.e_);
  }
  friend NormExp operator/(const NormExp& a, const NormExp& b) {
    if (b.zero_) throw DivisionByZero();
    if (a.zero_) return zero();
    return NormExp(a.e_ - b.e_);
  }
  NormExp pow(long long k) const {
    if (zero_) {
      if (k <= 0) throw DivisionByZero();
      return zero();
    }
    return NormExp(e_ * k);
  }
  /// Exact k-th root (exponent division), k >= 1.
  NormExp root(long long k) const {
    if (zero_) return zero();
    return NormExp(e_ / k);
  }

  friend bool operator==(const NormExp& a, const NormExp& b) {
    if (a.zero_ || b.zero_) return a.zero_ == b.zero_;
    return a.e_ == b.e_;
  }
  friend bool operator!=(const NormExp& a, const NormExp& b) {
    return !(a == b);
  }
  friend bool operator<(const NormExp& a, const NormExp& b) {
    if (a.zero_) return !b.zero_;
    if (b.zero_) return false;
    return a.e_ < b.e_;
  }
  friend bool operator>(const NormExp& a, const NormExp& b) { return b < a; }
  friend bool operator<=(const NormExp& a, const NormExp& b) { return !(b < a); }
  friend bool operator>=(const NormExp& a, const NormExp& b) { return !(a < b); }

  /// Exponent rendered as a rational literal; "-inf" for the zero norm.
  std::string exp_string() const {
    return zero_ ? "-inf" : format_rational(e_);
  }

 private:
  bool zero_;
  BigRat e_;
};

}  // namespace padyn
