#include "padyn/padic_exact.hpp"

namespace padyn {

long long int_valuation(BigInt n, const Prime& p) {
  if (n == 0) throw ZeroInput("int_valuation");
  BigInt pb = p.big();
  long long v = 0;
  BigInt q, r;
  for (;;) {
    boost::multiprecision::divide_qr(n, pb, q, r);
    if (r != 0) break;
    n = q;
    ++v;
  }
  return v;
}

Valuation PadicExact::valuation() const {
  if (is_zero()) return Valuation::infinity();
  long long v = int_valuation(rat_num(value_), prime_) -
                int_valuation(rat_den(value_), prime_);
  return Valuation(BigRat(v));
}

BigRat PadicExact::unit_part() const {
  if (is_zero()) throw ZeroInput("unit_part");
  long long v = static_cast<long long>(valuation().finite());
  BigRat pk = rat_pow(BigRat(prime_.value()), v);
  return value_ / pk;
}

}  // namespace padyn
