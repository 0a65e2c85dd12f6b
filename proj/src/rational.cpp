#include "padyn/rational.hpp"

#include <cctype>

namespace padyn {

BigRat parse_rational(const std::string& text) {
  if (text.empty()) throw ParseError("empty rational literal");
  std::size_t i = 0;
  bool negative = false;
  if (text[i] == '-') {
    negative = true;
    ++i;
  }
  std::size_t num_begin = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == num_begin)
    throw ParseError("expected digits in rational literal '" + text + "'");
  BigInt num(text.substr(num_begin, i - num_begin));
  BigInt den = 1;
  if (i < text.size()) {
    if (text[i] != '/')
      throw ParseError("unexpected character in rational literal '" + text + "'");
    ++i;
    std::size_t den_begin = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == den_begin || i != text.size())
      throw ParseError("malformed denominator in rational literal '" + text + "'");
    den = BigInt(text.substr(den_begin));
    if (den == 0) throw ParseError("zero denominator in '" + text + "'");
  }
  if (negative) num = -num;
  return BigRat(num, den);
}

std::string format_rational(const BigRat& x) {
  std::string s = rat_num(x).str();
  BigInt den = rat_den(x);
  if (den != 1) s += "/" + den.str();
  return s;
}

std::size_t rational_bits(const BigRat& x) {
  if (x == 0) return 0;
  BigInt n = boost::multiprecision::abs(rat_num(x));
  BigInt d = rat_den(x);
  std::size_t nb = boost::multiprecision::msb(n) + 1;
  std::size_t db = boost::multiprecision::msb(d) + 1;
  return nb > db ? nb : db;
}

BigRat rat_pow(const BigRat& x, long long k) {
  if (k == 0) return BigRat(1);
  if (x == 0) {
    if (k < 0) throw DivisionByZero();
    return BigRat(0);
  }
  bool invert = k < 0;
  unsigned long long e = invert ? static_cast<unsigned long long>(-k)
                                : static_cast<unsigned long long>(k);
  BigInt n = boost::multiprecision::pow(rat_num(x), static_cast<unsigned>(e));
  BigInt d = boost::multiprecision::pow(rat_den(x), static_cast<unsigned>(e));
  return invert ? BigRat(d, n) : BigRat(n, d);
}

BigInt mod_inverse(const BigInt& a, const BigInt& m) {
  BigInt old_r = a % m, r = m;
  if (old_r < 0) old_r += m;
  BigInt old_s = 1, s = 0;
  while (r != 0) {
    BigInt q = old_r / r;
    BigInt tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1)
    throw Error("modular inverse does not exist (gcd = " + old_r.str() + ")");
  old_s %= m;
  if (old_s < 0) old_s += m;
  return old_s;
}

BigInt mod_residue(const BigRat& x, const BigInt& m) {
  BigInt n = rat_num(x) % m;
  if (n < 0) n += m;
  BigInt d = rat_den(x) % m;
  return (n * mod_inverse(d, m)) % m;
}

}  // namespace padyn
