#pragma once

#include <utility>

#include "padyn/padic_exact.hpp"

namespace padyn {

/// Norms (alpha <= beta) of the two roots of x^2 + a x + b, read off the
/// Newton polygon of the quadratic: if 2 v(a) <= v(b) the root valuations
/// are v(a) and v(b) - v(a); otherwise both equal v(b)/2 (a rational,
/// possibly non-integer, exponent). Requires b != 0 so that no root is 0.
///
/// The result always satisfies: alpha * beta = |b|_p; if alpha != beta
/// then the larger equals |a|_p; if alpha = beta then |a|_p <= alpha.
std::pair<NormExp, NormExp> root_norms_newton(const PadicExact& a,
                                              const PadicExact& b);

}  // namespace padyn
