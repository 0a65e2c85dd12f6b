#pragma once

#include <string>
#include <utility>
#include <vector>

#include "padyn/rational.hpp"

namespace padyn {

/// Dense univariate polynomial over Q, coefficients in ascending order.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<BigRat> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly constant(BigRat v) { return Poly({std::move(v)}); }
  static Poly x() { return Poly({BigRat(0), BigRat(1)}); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  BigRat coeff(std::size_t i) const {
    return i < c_.size() ? c_[i] : BigRat(0);
  }
  const std::vector<BigRat>& coeffs() const { return c_; }
  const BigRat& leading() const { return c_.back(); }

  BigRat eval(const BigRat& x) const;
  Poly derivative() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const BigRat& s, const Poly& a);
  Poly operator-() const;
  Poly pow(unsigned k) const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Euclidean division over Q: a = q*b + r with deg r < deg b.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  /// Monic gcd.
  static Poly gcd(Poly a, Poly b);

  std::string to_string() const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<BigRat> c_;
};

/// Distinct rational roots (each verified by exact evaluation). Complete
/// when the cleared leading/trailing coefficients factor within the trial
/// bound; `complete` reports that.
struct RationalRoots {
  std::vector<BigRat> roots;
  bool complete;
};
RationalRoots rational_roots(const Poly& f);

}  // namespace padyn
