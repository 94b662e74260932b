#pragma once

#include "parind/chars.hpp"
#include "parind/qscalar.hpp"

#include <complex>
#include <optional>
#include <variant>
#include <vector>

namespace parind::classify {

using chars::Case;

/// Scalar slot for nu(zeta): exact in Q(sqrt(q)) when possible, complex
/// float fallback for off-locus scans.
using Nu = std::variant<QScalar, std::complex<double>>;

inline constexpr double kMembershipTol = 1e-9;

/// Parameters of the two-generator Hecke algebra attached to (q, n, case)
/// at matching parity: lambda = q^n (unramified) resp. q^{n/2} (ramified),
/// gamma = lambda^{1/2}, and the normalized relation g^2 = (gamma -
/// gamma^{-1}) g + 1.
struct HeckeParams {
  Case kind;
  int n;
  int64_t q;
  Rational lambda;
  QScalar gamma;
  QScalar rel_coeff;  // gamma - gamma^{-1}
};

struct ReducibilityReport {
  int64_t q;
  int n;
  Case kind;
  int64_t theta_a;
  Nu nu_zeta;

  int64_t theta_order;
  bool regular;
  bool condition;
  bool parity_ok;
  bool commutative_case;  // N_G(rho_0) has no J: n even unramified / n odd ramified
  std::optional<int> witness;
  bool witness_agrees;  // congruence test vs witness search (flagged, never silently resolved)

  std::optional<HeckeParams> hecke;  // absent when parity does not match
  Rational delta_p_zeta;
  std::vector<QScalar> gamma_set;
  bool nu_in_gamma_set;
  bool reducible;
};

/// delta_P(zeta) = q^{-2n^2} (unramified) or q^{-n^2} (ramified), exact.
Rational delta_p_zeta(int64_t q, int n, Case c);

/// {gamma^2, -1, gamma^{-2}} at matching parity, empty otherwise.
std::vector<QScalar> gamma_set(int64_t q, int n, Case c);

/// Hecke parameters at matching parity.
std::optional<HeckeParams> hecke_params(int64_t q, int n, Case c);

bool parity_matches(int n, Case c);

bool nu_in_set(const Nu& nu, const std::vector<QScalar>& set, double tol = kMembershipTol);

/// Full verdict for one (q, n, case, theta, nu(zeta)) input.
/// ZeroCharacterValue if nu = 0. Irregular theta is reported, not rejected.
ReducibilityReport classify(int64_t q, int n, Case c, int64_t theta_a, const Nu& nu);

}  // namespace parind::classify
