#include "padyn/newton_polygon.hpp"

namespace padyn {

std::pair<NormExp, NormExp> root_norms_newton(const PadicExact& a,
                                              const PadicExact& b) {
  if (a.prime() != b.prime()) throw PrimeMismatch();
  if (b.is_zero()) throw ZeroB();
  Valuation va = a.valuation();
  BigRat vb = b.valuation().finite();
  if (!va.is_infinite() && 2 * va.finite() <= vb) {
    // Polygon breaks at (1, v(a)): slopes give valuations v(a), v(b)-v(a).
    NormExp n1(-va.finite());
    NormExp n2(va.finite() - vb);
    return n1 <= n2 ? std::make_pair(n1, n2) : std::make_pair(n2, n1);
  }
  // Single segment of slope -v(b)/2: both roots share the norm.
  NormExp n(-vb / 2);
  return {n, n};
}

}  // namespace padyn
