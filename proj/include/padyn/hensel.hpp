#pragma once

#include <optional>

#include "padyn/padic_approx.hpp"

namespace padyn {

struct SqrtResult {
  PadicApprox approx;               // a root to the requested precision
  std::optional<PadicExact> exact;  // present when x is a square in Q
};

/// Square root in Q_p, if one exists: the valuation must be even and the
/// unit part a quadratic residue mod p (p odd) or 1 mod 8 (p = 2). The
/// root is lifted by successive approximation to n digits; when x is a
/// rational square the exact root is returned as well.
///
/// Throws NoRootInQp carrying the violated criterion.
SqrtResult sqrt_qp(const PadicExact& x, std::size_t n);

/// Existence decision alone. sqrt_exists_qp(0) is true.
bool sqrt_exists_qp(const PadicExact& x);

}  // namespace padyn
