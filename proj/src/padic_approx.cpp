#include "padyn/padic_approx.hpp"

#include <algorithm>
#include <sstream>

namespace padyn {

PadicApprox PadicApprox::from_exact(const PadicExact& x, std::size_t n) {
  if (x.is_zero()) throw ZeroInput("digit_expand");
  if (n == 0) throw Error("digit_expand: precision must be >= 1");
  long long v = rat_to_ll(x.valuation().finite());
  BigRat u = x.unit_part();
  BigInt modulus = boost::multiprecision::pow(x.prime().big(),
                                              static_cast<unsigned>(n));
  BigInt unit = mod_residue(u, modulus);
  return PadicApprox(x.prime(), v, std::move(unit), n);
}

PadicApprox PadicApprox::zero_to(Prime prime, long long abs_prec) {
  return PadicApprox(prime, abs_prec, BigInt(0), 0);
}

PadicApprox PadicApprox::from_unit(Prime prime, long long val, BigInt unit,
                                   std::size_t prec) {
  if (prec == 0) throw Error("from_unit: precision must be >= 1");
  BigInt modulus = boost::multiprecision::pow(prime.big(),
                                              static_cast<unsigned>(prec));
  unit %= modulus;
  if (unit < 0) unit += modulus;
  if (unit % prime.big() == 0)
    throw Error("from_unit: unit part divisible by p");
  return PadicApprox(prime, val, std::move(unit), prec);
}

long long PadicApprox::valuation() const {
  if (prec_ == 0)
    throw InsufficientPrecision(
        "value indistinguishable from 0 below p^" + std::to_string(val_));
  return val_;
}

std::vector<std::uint64_t> PadicApprox::digits() const {
  std::vector<std::uint64_t> out;
  out.reserve(prec_);
  BigInt u = unit_;
  BigInt pb = prime_.big();
  for (std::size_t i = 0; i < prec_; ++i) {
    BigInt q, r;
    boost::multiprecision::divide_qr(u, pb, q, r);
    out.push_back(r.convert_to<std::uint64_t>());
    u = q;
  }
  return out;
}

BigInt PadicApprox::unit_mod(std::size_t k) const {
  if (k > prec_)
    throw InsufficientPrecision("only " + std::to_string(prec_) +
                                " digits known, " + std::to_string(k) +
                                " requested");
  return unit_ % pow_p(k);
}

PadicExact PadicApprox::representative() const {
  BigRat scale = rat_pow(BigRat(prime_.value()), val_);
  return PadicExact(BigRat(unit_) * scale, prime_);
}

bool PadicApprox::agrees_with(const PadicExact& x) const {
  if (prec_ == 0 || x.is_zero()) return false;
  PadicApprox ref = from_exact(x, prec_);
  return ref.val_ == val_ && ref.unit_ == unit_;
}

PadicApprox PadicApprox::operator-() const {
  if (prec_ == 0) return *this;
  BigInt modulus = pow_p(prec_);
  return PadicApprox(prime_, val_, modulus - unit_, prec_);
}

PadicApprox operator+(const PadicApprox& a, const PadicApprox& b) {
  PadicApprox::check_context(a, b);
  long long abs = std::min(a.abs_precision(), b.abs_precision());
  long long s = std::min(a.val_, b.val_);
  if (abs <= s) return PadicApprox::zero_to(a.prime_, abs);
  std::size_t m = static_cast<std::size_t>(abs - s);
  BigInt modulus = a.pow_p(m);
  BigInt sum = 0;
  if (a.prec_ > 0)
    sum += a.unit_ * a.pow_p(static_cast<std::size_t>(a.val_ - s));
  if (b.prec_ > 0)
    sum += b.unit_ * b.pow_p(static_cast<std::size_t>(b.val_ - s));
  sum %= modulus;
  if (sum < 0) sum += modulus;
  if (sum == 0) return PadicApprox::zero_to(a.prime_, abs);
  long long w = int_valuation(sum, a.prime_);
  long long val = s + w;
  std::size_t prec = static_cast<std::size_t>(abs - val);
  BigInt unit = (sum / a.pow_p(static_cast<std::size_t>(w))) % a.pow_p(prec);
  return PadicApprox(a.prime_, val, std::move(unit), prec);
}

PadicApprox operator-(const PadicApprox& a, const PadicApprox& b) {
  return a + (-b);
}

PadicApprox operator*(const PadicApprox& a, const PadicApprox& b) {
  PadicApprox::check_context(a, b);
  if (a.prec_ == 0 || b.prec_ == 0)
    return PadicApprox::zero_to(a.prime_, a.val_ + b.val_);
  std::size_t prec = std::min(a.prec_, b.prec_);
  BigInt unit = (a.unit_ * b.unit_) % a.pow_p(prec);
  return PadicApprox(a.prime_, a.val_ + b.val_, std::move(unit), prec);
}

PadicApprox operator/(const PadicApprox& a, const PadicApprox& b) {
  PadicApprox::check_context(a, b);
  if (b.prec_ == 0)
    throw InsufficientPrecision("division by a value indistinguishable from 0");
  if (a.prec_ == 0)
    return PadicApprox::zero_to(a.prime_, a.val_ - b.val_);
  std::size_t prec = std::min(a.prec_, b.prec_);
  BigInt modulus = a.pow_p(prec);
  BigInt unit = (a.unit_ * mod_inverse(b.unit_ % modulus, modulus)) % modulus;
  return PadicApprox(a.prime_, a.val_ - b.val_, std::move(unit), prec);
}

std::string PadicApprox::to_string() const {
  std::ostringstream os;
  if (prec_ == 0) {
    os << "O(" << prime_.value() << "^" << val_ << ")";
    return os.str();
  }
  os << prime_.value() << "^" << val_ << " * (";
  auto d = digits();
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) os << ",";
    os << d[i];
  }
  os << ")";
  return os.str();
}

PadicApprox digit_expand(const PadicExact& x, std::size_t n) {
  return PadicApprox::from_exact(x, n);
}

}  // namespace padyn
