#include "padyn/periodic_orbits.hpp"

#include "padyn/ergodicity.hpp"
#include "padyn/hensel.hpp"

namespace padyn {

PadicExact sextic_P(const PadicExact& a, const PadicExact& b,
                    const PadicExact& x) {
  PadicExact m = x * x + a * x + b;
  PadicExact d = a * x + b;
  return m * m * m + a * x * m * d + b * d * d;
}

PadicExact lemma8_cubic(const PadicExact& a, const PadicExact& b) {
  Prime p = a.prime();
  auto k = [&](long long v) { return PadicExact(v, p); };
  PadicExact c2 = k(3) * a + k(3);
  PadicExact c1 = k(4) * a * a + k(7) * a + k(3);
  PadicExact c0 = k(2) * a * a * a + k(6) * a * a + k(6) * a + k(2);
  return b * b * b + c2 * b * b + c1 * b + c0;
}

std::pair<BigRat, BigRat> h_param(const BigRat& q) {
  if (q == 0) throw ExcludedQ("q = 0 gives b = 0");
  if (q == -1) throw ExcludedQ("q = -1 is the pole of h");
  if (q == BigRat(-1, 2)) throw ExcludedQ("q = -1/2 gives a = 0");
  BigRat den = 1 + 3 * q + 4 * q * q + 2 * q * q * q;
  BigRat b = q / den;
  BigRat a = q * b - 1;
  return {b, a};
}

PeriodicOrbitCert build_2periodic(const BigRat& q, Prime p) {
  auto [b_r, a_r] = h_param(q);
  PadicExact a(a_r, p), b(b_r, p);
  Map31 m(a, b);

  PeriodicOrbitCert cert{q,
                         a,
                         b,
                         b,
                         b,
                         b.norm(),
                         NormExp::zero(),
                         false,
                         false,
                         false,
                         false,
                         std::nullopt};
  // h_param keeps a != -1, so b itself is never the singular point.
  if (b == m.x_hat()) throw Error("parameter b coincides with x_hat");

  cert.orbit1 = m.eval(b);
  cert.norm1 = cert.orbit1.norm();
  cert.r_in_A = radius_in_A(m, cert.norm0);
  cert.sqrt_disc_exists = sqrt_exists_qp(m.disc());

  if (cert.orbit1 == m.x_hat()) {
    cert.singular_hit = true;
    return cert;
  }
  cert.verified = m.eval(cert.orbit1) == b;
  cert.multiplier_norm =
      m.f_prime_norm(cert.orbit0) * m.f_prime_norm(cert.orbit1);
  return cert;
}

bool orbit_sphere_swap_check(const Map31& m, const PadicExact& t1,
                             const PadicExact& t2, const PadicExact& x) {
  if (t1 == m.x_hat() || t2 == m.x_hat()) throw SingularPoint();
  if (m.eval(t1) != t2 || m.eval(t2) != t1) throw NotPeriodicPair();
  if (x == m.x_hat()) throw SingularPoint();
  return (m.eval(x) - t2).norm() == (x - t1).norm();
}

bool prop5_check(const Map31& m) {
  if (!radius_in_A(m, m.b().norm())) return true;
  return m.a().norm() != NormExp::one();
}

}  // namespace padyn
