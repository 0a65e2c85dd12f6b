#include "padyn/poly.hpp"

#include <algorithm>
#include <sstream>

namespace padyn {

BigRat Poly::eval(const BigRat& x) const {
  BigRat acc(0);
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<BigRat> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * BigInt(i);
  return Poly(std::move(d));
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<BigRat> c(std::max(a.c_.size(), b.c_.size()), BigRat(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly Poly::operator-() const {
  std::vector<BigRat> c(c_);
  for (auto& v : c) v = -v;
  return Poly(std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<BigRat> c(a.c_.size() + b.c_.size() - 1, BigRat(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return Poly(std::move(c));
}

Poly operator*(const BigRat& s, const Poly& a) {
  std::vector<BigRat> c(a.c_);
  for (auto& v : c) v *= s;
  return Poly(std::move(c));
}

Poly Poly::pow(unsigned k) const {
  Poly result = Poly::constant(BigRat(1));
  Poly base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    base = base * base;
    k >>= 1;
  }
  return result;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DivisionByZero();
  Poly r = a;
  std::vector<BigRat> q(a.c_.size() > b.c_.size() ? a.c_.size() - b.c_.size() + 1
                                                  : 1,
                        BigRat(0));
  while (!r.is_zero() && r.degree() >= b.degree()) {
    std::size_t shift = static_cast<std::size_t>(r.degree() - b.degree());
    BigRat factor = r.leading() / b.leading();
    q[shift] += factor;
    std::vector<BigRat> sub(shift, BigRat(0));
    sub.insert(sub.end(), b.c_.begin(), b.c_.end());
    for (auto& v : sub) v *= factor;
    r = r - Poly(std::move(sub));
  }
  return {Poly(std::move(q)), r};
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = b;
    b = r;
  }
  if (a.is_zero()) return a;
  BigRat inv_lead = BigRat(1) / a.leading();
  return inv_lead * a;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << format_rational(c_[i]);
    if (i >= 1) os << "*x";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

namespace {

// Divisors of |n| by trial division; gives up past the iteration budget.
bool divisors_of(BigInt n, std::vector<BigInt>* out) {
  n = boost::multiprecision::abs(n);
  if (n == 0) return false;
  std::vector<std::pair<BigInt, unsigned>> factors;
  BigInt d = 2;
  std::size_t budget = 2'000'000;
  while (d * d <= n) {
    if (budget-- == 0) return false;
    if (n % d == 0) {
      unsigned e = 0;
      while (n % d == 0) {
        n /= d;
        ++e;
      }
      factors.push_back({d, e});
    }
    ++d;
  }
  if (n > 1) factors.push_back({n, 1});
  out->push_back(BigInt(1));
  for (const auto& [prime, mult] : factors) {
    std::size_t existing = out->size();
    BigInt power = 1;
    for (unsigned e = 1; e <= mult; ++e) {
      power *= prime;
      for (std::size_t i = 0; i < existing; ++i)
        out->push_back((*out)[i] * power);
    }
  }
  return true;
}

}  // namespace

RationalRoots rational_roots(const Poly& f) {
  RationalRoots result{{}, true};
  if (f.is_zero() || f.degree() == 0) return result;

  // Clear denominators to an integer polynomial.
  BigInt lcm = 1;
  for (const auto& c : f.coeffs())
    lcm = boost::multiprecision::lcm(lcm, rat_den(c));
  std::vector<BigInt> ic;
  for (const auto& c : f.coeffs()) ic.push_back(rat_num(c) * (lcm / rat_den(c)));

  std::size_t low = 0;
  while (low < ic.size() && ic[low] == 0) ++low;
  if (low > 0) result.roots.push_back(BigRat(0));
  if (low + 1 == ic.size()) return result;

  std::vector<BigInt> num_divs, den_divs;
  if (!divisors_of(ic[low], &num_divs) ||
      !divisors_of(ic.back(), &den_divs)) {
    result.complete = false;
    return result;
  }
  for (const BigInt& n : num_divs) {
    for (const BigInt& d : den_divs) {
      for (int sign : {1, -1}) {
        BigRat candidate(sign * n, d);
        if (f.eval(candidate) == 0 &&
            std::find(result.roots.begin(), result.roots.end(), candidate) ==
                result.roots.end())
          result.roots.push_back(candidate);
      }
    }
  }
  std::sort(result.roots.begin(), result.roots.end());
  return result;
}

}  // namespace padyn
