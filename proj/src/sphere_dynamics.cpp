#include "padyn/sphere_dynamics.hpp"

#include <algorithm>

namespace padyn {

RadiusMapKind radius_map_kind(const Map31& m) {
  if (m.alpha() < m.beta()) return RadiusMapKind::PhiCase;
  if (m.delta() < m.alpha()) return RadiusMapKind::ZetaCase;
  return RadiusMapKind::EtaCase;
}

SphereClass classify_sphere(const Map31& m, const NormExp& r) {
  if (r.is_zero()) throw Error("classify_sphere: radius must be positive");
  if (r < m.alpha()) return SphereClass::SiegelInterior;
  if (r == m.alpha()) return SphereClass::CriticalAlpha;
  if (radius_map_kind(m) == RadiusMapKind::PhiCase) {
    if (r < m.beta()) return SphereClass::InvariantAnnulus;
    if (r == m.beta()) return SphereClass::CriticalBeta;
  }
  return SphereClass::Escaping;
}

bool radius_in_A(const Map31& m, const NormExp& r) {
  if (r.is_zero()) return false;
  SphereClass c = classify_sphere(m, r);
  return c == SphereClass::SiegelInterior || c == SphereClass::InvariantAnnulus;
}

namespace {

NormExp zeta_upper(const Map31& m) {
  // alpha^2 / delta, the radius of the sphere through x_hat in ZetaCase.
  return m.alpha() * m.alpha() / m.delta();
}

// Norm threshold beyond which divergence is certain and no pre-singular
// point can occur.
NormExp escape_threshold(const Map31& m) {
  switch (radius_map_kind(m)) {
    case RadiusMapKind::PhiCase:
      return m.beta();
    case RadiusMapKind::ZetaCase:
      return zeta_upper(m);
    case RadiusMapKind::EtaCase:
      return m.alpha();
  }
  return m.alpha();
}

}  // namespace

NormExp apply_radius_map(const Map31& m, const NormExp& r) {
  if (r.is_zero()) return r;
  const NormExp& alpha = m.alpha();
  if (r < alpha) return r;
  if (r == alpha) throw CriticalRadius();
  switch (radius_map_kind(m)) {
    case RadiusMapKind::PhiCase: {
      if (r < m.beta()) return r;
      if (r == m.beta()) throw CriticalRadius();
      return r.pow(2) / m.beta();
    }
    case RadiusMapKind::ZetaCase: {
      NormExp upper = zeta_upper(m);
      if (r < upper) return r.pow(3) / alpha.pow(2);
      if (r == upper) throw CriticalRadius();
      return r.pow(2) / m.delta();
    }
    case RadiusMapKind::EtaCase:
      return r.pow(2) / alpha;
  }
  throw Error("unreachable radius map case");
}

CriticalImage critical_sphere_image(const Map31& m, const PadicExact& x) {
  if (x == m.x_hat()) throw SingularPoint();
  NormExp r = x.norm();
  RadiusMapKind kind = radius_map_kind(m);
  bool on_alpha = r == m.alpha();
  bool on_beta = kind == RadiusMapKind::PhiCase && r == m.beta();
  if (!on_alpha && !on_beta) throw NotCriticalSphere();

  NormExp next = m.norm_f(x);
  CriticalVerdict verdict;
  if (next == r) {
    verdict = CriticalVerdict::StaysOnCriticalSphere;
  } else if (kind == RadiusMapKind::PhiCase &&
             ((on_alpha && next == m.beta()) ||
              (on_beta && next == m.alpha()))) {
    verdict = CriticalVerdict::TransfersToOtherCritical;
  } else if (next > escape_threshold(m)) {
    verdict = CriticalVerdict::CertifiedEscape;
  } else if (next.is_zero() || radius_in_A(m, next)) {
    // f(x) reached the fixed point or an invariant sphere; it stays
    // there for all further iterates.
    verdict = CriticalVerdict::LandsOnInvariantSphere;
  } else {
    throw Error("critical sphere image: unexpected norm " +
                next.exp_string());
  }
  return {next, verdict};
}

OrbitTrace run_orbit(const Map31& m, const PadicExact& x,
                     const OrbitOptions& options) {
  OrbitTrace trace;
  NormExp threshold = escape_threshold(m);
  PadicExact current = x;

  for (std::size_t n = 0;; ++n) {
    NormExp norm = current.norm();
    trace.steps.push_back({n, current, norm});

    if (current == m.x_hat()) {
      trace.terminal = OrbitTerminal::SingularHit;
      trace.at_step = n;
      return trace;
    }
    // Exact-repetition scan over the recent history window.
    std::size_t lookback = std::min(options.history_window, n);
    for (std::size_t back = 1; back <= lookback; ++back) {
      const OrbitStep& prev = trace.steps[n - back];
      if (prev.point == current) {
        trace.terminal = OrbitTerminal::FixedOrCycling;
        trace.at_step = n;
        trace.period = back;
        return trace;
      }
    }
    if (norm > threshold) {
      trace.terminal = OrbitTerminal::EscapeCertified;
      trace.at_step = n;
      return trace;
    }
    if (n == options.max_steps) break;

    PadicExact next = m.eval(current);
    if (rational_bits(next.value()) > options.max_bits) break;
    current = next;
  }

  trace.at_step = trace.steps.size() - 1;
  trace.terminal = radius_in_A(m, trace.steps.back().norm)
                       ? OrbitTerminal::InvariantSphereResident
                       : OrbitTerminal::BudgetExhausted;
  return trace;
}

OrbitTrace run_orbit(const Map31& m, const PadicExact& x,
                     std::size_t max_steps) {
  OrbitOptions options;
  options.max_steps = max_steps;
  return run_orbit(m, x, options);
}

std::vector<NormExp> preimage_radius_ladder(const Map31& m,
                                            std::size_t k_max) {
  if (radius_map_kind(m) != RadiusMapKind::ZetaCase)
    throw WrongCase("pre-image radius ladder requires delta < alpha = beta");
  BigRat ea = m.alpha().exponent();
  BigRat ed = m.delta().exponent();
  BigRat target = 2 * ea - ed;  // exp(alpha^2/delta)

  std::vector<NormExp> ladder;
  BigRat pow3(1);
  for (std::size_t k = 0; k <= k_max; ++k) {
    BigRat ek = ea + (ea - ed) / pow3;
    // Symbolic re-verification: k middle-branch steps reach alpha^2/delta.
    BigRat e = ek;
    for (std::size_t j = 0; j < k; ++j) {
      if (!(ea < e && e < target))
        throw Error("radius ladder left the middle zeta branch");
      e = 3 * e - 2 * ea;
    }
    if (e != target) throw Error("radius ladder identity failed");
    ladder.emplace_back(ek);
    pow3 *= 3;
  }
  return ladder;
}

NormExp rho(const Map31& m, const NormExp& r) {
  if (!radius_in_A(m, r)) throw NotInvariantRadius();
  if (r < m.alpha()) return r.pow(3) / (m.alpha() * m.beta());
  return r.pow(2) / m.delta();
}

MinimalBallReport minimal_invariant_ball(const Map31& m, const NormExp& r,
                                         unsigned mmax) {
  if (!radius_in_A(m, r)) throw NotInvariantRadius();
  MinimalBallReport report{rho(m, r), {}};
  BigRat er = r.exponent();
  long long va = rat_to_ll(m.a().valuation().finite());
  long long vb = rat_to_ll(m.b().valuation().finite());
  bool below_alpha = r < m.alpha();
  for (unsigned mm = 1; mm <= mmax; ++mm) {
    bool minimal = below_alpha ? (2 * er == BigRat(-(vb + (long long)mm)))
                               : (er == BigRat(-(va + (long long)mm)));
    report.rows.push_back({mm, NormExp(er - mm), minimal});
  }
  return report;
}

bool local_isometry_check(const Map31& m, const PadicExact& x,
                          const PadicExact& y) {
  if (x == m.x_hat() || y == m.x_hat()) throw SingularPoint();
  NormExp r = x.norm();
  if (y.norm() != r || !radius_in_A(m, r)) throw NotInvariantRadius();
  return (m.eval(x) - m.eval(y)).norm() == (x - y).norm();
}

long long digit_preservation_index(const Map31& m, const PadicExact& x) {
  if (!radius_in_A(m, x.norm())) throw NotInvariantRadius();
  long long vx = rat_to_ll(x.valuation().finite());
  long long vd = rat_to_ll((m.a() * x + m.b()).valuation().finite());
  long long s = 2 * vx - vd;
  if (s <= 0) throw Error("digit preservation index must be positive");

  // Digit-level verification: f(x) shares exactly the first s digits.
  PadicExact fx = m.eval(x);
  std::size_t n = static_cast<std::size_t>(s) + 1;
  PadicApprox dx = digit_expand(x, n);
  PadicApprox dfx = digit_expand(fx, n);
  if (dfx.valuation() != dx.valuation())
    throw Error("digit preservation: valuation changed on invariant sphere");
  auto xd = dx.digits();
  auto fd = dfx.digits();
  for (long long i = 0; i < s; ++i)
    if (xd[static_cast<std::size_t>(i)] != fd[static_cast<std::size_t>(i)])
      throw Error("digit preservation index verification failed");
  if (xd[static_cast<std::size_t>(s)] == fd[static_cast<std::size_t>(s)])
    throw Error("digit at index s unexpectedly equal");
  return s;
}

std::vector<PadicExact> sphere_partition(const NormExp& r, std::size_t depth,
                                         Prime p) {
  if (r.is_zero() || !r.is_integral()) throw NonIntegralRadius();
  if (depth == 0) throw Error("sphere_partition: depth must be >= 1");
  long long v = -rat_to_ll(r.exponent());
  BigRat scale = rat_pow(BigRat(p.value()), v);
  BigInt pd = boost::multiprecision::pow(p.big(), static_cast<unsigned>(depth));
  std::vector<PadicExact> reps;
  for (BigInt u = 1; u < pd; ++u) {
    if (u % p.big() == 0) continue;
    reps.emplace_back(BigRat(u) * scale, p);
  }
  return reps;
}

ApproxMap::ApproxMap(const Map31& m, std::size_t precision)
    : a_(digit_expand(m.a(), precision)), b_(digit_expand(m.b(), precision)) {}

PadicApprox ApproxMap::eval(const PadicApprox& x) const {
  PadicApprox quad = x * x + a_ * x + b_;
  PadicApprox den = a_ * x + b_;
  return x * quad / den;
}

}  // namespace padyn
