#include "parind/classify.hpp"

namespace parind::classify {

bool parity_matches(int n, Case c) {
  return (c == Case::unramified) ? (n % 2 == 1) : (n % 2 == 0);
}

Rational delta_p_zeta(int64_t q, int n, Case c) {
  long e = (c == Case::unramified) ? 2L * n * n : 1L * n * n;
  return rational_pow(Rational(q), -e);
}

std::optional<HeckeParams> hecke_params(int64_t q, int n, Case c) {
  if (!parity_matches(n, c)) return std::nullopt;
  HeckeParams hp;
  hp.kind = c;
  hp.n = n;
  hp.q = q;
  long lam_exp = (c == Case::unramified) ? n : n / 2;
  hp.lambda = rational_pow(Rational(q), lam_exp);
  // gamma = lambda^{1/2} = q^{e/2}: rational when e even, q^{(e-1)/2} sqrt(q) when odd.
  if (lam_exp % 2 == 0) {
    hp.gamma = QScalar(rational_pow(Rational(q), lam_exp / 2));
  } else {
    hp.gamma = QScalar(0, rational_pow(Rational(q), (lam_exp - 1) / 2), q);
  }
  hp.rel_coeff = hp.gamma - hp.gamma.inverse();
  return hp;
}

std::vector<QScalar> gamma_set(int64_t q, int n, Case c) {
  auto hp = hecke_params(q, n, c);
  if (!hp) return {};
  // gamma_1 = gamma_2 = gamma collapses {g1 g2, -g1/g2, -g2/g1, 1/(g1 g2)}
  // to {gamma^2, -1, gamma^{-2}}.
  QScalar lam = hp->gamma * hp->gamma;
  std::vector<QScalar> out{lam, QScalar(-1), lam.inverse()};
  // dedupe (gamma^2 = 1 would collapse further; not reachable for q >= 3)
  std::vector<QScalar> uniq;
  for (const auto& v : out) {
    bool dup = false;
    for (const auto& u : uniq) dup = dup || (u == v);
    if (!dup) uniq.push_back(v);
  }
  return uniq;
}

bool nu_in_set(const Nu& nu, const std::vector<QScalar>& set, double tol) {
  if (std::holds_alternative<QScalar>(nu)) {
    const auto& v = std::get<QScalar>(nu);
    for (const auto& s : set)
      if (s == v) return true;
    return false;
  }
  std::complex<double> v = std::get<std::complex<double>>(nu);
  for (const auto& s : set)
    if (std::abs(v - s.to_complex()) < tol) return true;
  return false;
}

ReducibilityReport classify(int64_t q, int n, Case c, int64_t theta_a, const Nu& nu) {
  bool nu_zero = std::holds_alternative<QScalar>(nu)
                     ? std::get<QScalar>(nu).is_zero()
                     : std::abs(std::get<std::complex<double>>(nu)) == 0.0;
  if (nu_zero) throw ZeroCharacterValueError("classify: nu(zeta) must be nonzero");

  chars::CharExponent theta = chars::make_char(q, n, c, theta_a);

  ReducibilityReport r;
  r.q = q;
  r.n = n;
  r.kind = c;
  r.theta_a = theta.a;
  r.nu_zeta = nu;
  r.theta_order = theta.order();
  r.regular = chars::is_regular(theta);
  r.condition = chars::condition_theta(theta);
  r.parity_ok = parity_matches(n, c);
  r.commutative_case = !r.parity_ok;
  r.witness = chars::condition_witness(theta);

  // The congruence form of the condition vs. the twist-witness search. The
  // two must agree for regular theta at matching parity (witness at j = m+1
  // mod n unramified, j = m ramified); a divergence is surfaced as a flag,
  // never silently resolved. At the opposite parity they are different
  // predicates and no agreement is claimed.
  r.witness_agrees = true;
  if (r.parity_ok && r.regular) {
    r.witness_agrees = (r.condition == r.witness.has_value());
    if (r.condition && r.witness.has_value()) {
      int expected = (c == Case::unramified) ? ((n + 1) / 2) % n : n / 2;
      r.witness_agrees = r.witness_agrees && (*r.witness == expected);
    }
  }

  r.hecke = hecke_params(q, n, c);
  r.delta_p_zeta = delta_p_zeta(q, n, c);
  r.gamma_set = gamma_set(q, n, c);
  r.nu_in_gamma_set = nu_in_set(nu, r.gamma_set);
  r.reducible = r.parity_ok && r.regular && r.condition && r.nu_in_gamma_set;
  return r;
}

}  // namespace parind::classify
