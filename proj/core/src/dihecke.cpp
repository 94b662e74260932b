#include "parind/dihecke.hpp"

#include <algorithm>

namespace parind::dihecke {

namespace {

int64_t module_radicand(const TwoDimModule<QScalar>& m, int64_t hint) {
  if (hint) return hint;
  if (m.gamma.radicand()) return m.gamma.radicand();
  if (m.nu.radicand()) return m.nu.radicand();
  for (auto& row : m.m0)
    for (auto& v : row)
      if (v.radicand()) return v.radicand();
  return 0;
}

std::array<QScalar, 2> kernel_vector(const QScalar m[2][2], const QScalar& t) {
  std::array<QScalar, 2> v{m[0][1], t - m[0][0]};
  if (v[0].is_zero() && v[1].is_zero()) v = {t - m[1][1], m[1][0]};
  if (v[0].is_zero() && v[1].is_zero()) v = {QScalar(1), QScalar(0)};  // scalar matrix
  return v;
}

std::array<std::complex<double>, 2> kernel_vector(const std::complex<double> m[2][2],
                                                  const std::complex<double>& t) {
  std::array<std::complex<double>, 2> v{m[0][1], t - m[0][0]};
  double scale = std::abs(m[0][0]) + std::abs(m[0][1]) + std::abs(m[1][0]) + std::abs(m[1][1]);
  if (std::abs(v[0]) + std::abs(v[1]) < 1e-12 * (1 + scale)) v = {t - m[1][1], m[1][0]};
  if (std::abs(v[0]) + std::abs(v[1]) < 1e-12 * (1 + scale))
    v = {std::complex<double>(1, 0), std::complex<double>(0, 0)};
  return v;
}

}  // namespace

template <>
std::vector<std::array<QScalar, 2>> matrix_eigenvectors(const QScalar m[2][2], int64_t q,
                                                        double) {
  QScalar tr = m[0][0] + m[1][1];
  QScalar det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  // t^2 - tr t + det = 0, i.e. t^2 - tr t - (-det).
  auto roots = solve_quadratic(tr, -det, q);
  std::vector<std::array<QScalar, 2>> out;
  for (const auto& t : roots) out.push_back(kernel_vector(m, t));
  return out;
}

template <>
std::vector<std::array<std::complex<double>, 2>> matrix_eigenvectors(
    const std::complex<double> m[2][2], int64_t, double) {
  std::complex<double> tr = m[0][0] + m[1][1];
  std::complex<double> det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  std::complex<double> disc = std::sqrt(tr * tr - 4.0 * det);
  std::vector<std::array<std::complex<double>, 2>> out;
  out.push_back(kernel_vector(m, (tr + disc) / 2.0));
  out.push_back(kernel_vector(m, (tr - disc) / 2.0));
  return out;
}

template <>
bool is_simple(const TwoDimModule<QScalar>& m, int64_t q_hint, double) {
  int64_t q = module_radicand(m, q_hint);
  auto eig = matrix_eigenvectors<QScalar>(m.m0, q, 0.0);
  if (eig.empty()) throw Error("is_simple: eigenvalues escape Q(sqrt(q))");
  for (const auto& v : eig) {
    QScalar w0 = m.m1[0][0] * v[0] + m.m1[0][1] * v[1];
    QScalar w1 = m.m1[1][0] * v[0] + m.m1[1][1] * v[1];
    QScalar cross = w0 * v[1] - w1 * v[0];
    if (cross.is_zero()) return false;  // common invariant line
  }
  return true;
}

template <>
bool is_simple(const TwoDimModule<std::complex<double>>& m, int64_t, double tol) {
  auto eig = matrix_eigenvectors<std::complex<double>>(m.m0, 0, tol);
  double scale = 0;
  for (auto& row : m.m1)
    for (auto& v : row) scale += std::abs(v);
  for (const auto& v : eig) {
    std::complex<double> w0 = m.m1[0][0] * v[0] + m.m1[0][1] * v[1];
    std::complex<double> w1 = m.m1[1][0] * v[0] + m.m1[1][1] * v[1];
    std::complex<double> cross = w0 * v[1] - w1 * v[0];
    double vnorm = std::norm(v[0]) + std::norm(v[1]);
    if (std::abs(cross) < tol * (1 + scale) * vnorm) return false;
  }
  return true;
}

std::vector<QScalar> gamma_set_oracle(const QScalar& gamma, int64_t q) {
  // For each eigenline (1-dim M0-invariant space) of the induced module, the
  // M1-stability condition is a polynomial identity in nu. nu * cross(nu) is
  // a quadratic; its coefficients are recovered by exact interpolation at
  // nu = 1, 2, 4 and verified at nu = 8, then solved over Q(sqrt(q)).
  auto cross_at = [&](const QScalar& nu) -> std::vector<QScalar> {
    auto m = induced_module<QScalar>(nu, gamma);
    auto eig = matrix_eigenvectors<QScalar>(m.m0, q, 0.0);
    if (eig.size() != 2) throw Error("gamma_set_oracle: expected two eigenlines");
    // Deterministic order: sort the eigenvalues by second coordinate of the
    // kernel vector (v = (m01, t - m00), monotone in t).
    std::vector<QScalar> cs;
    for (const auto& v : eig) {
      QScalar w0 = m.m1[0][0] * v[0] + m.m1[0][1] * v[1];
      QScalar w1 = m.m1[1][0] * v[0] + m.m1[1][1] * v[1];
      cs.push_back(nu * (w0 * v[1] - w1 * v[0]));
    }
    return cs;
  };

  std::vector<QScalar> samples{QScalar(1), QScalar(2), QScalar(4), QScalar(8)};
  std::vector<std::vector<QScalar>> vals;
  for (const auto& s : samples) vals.push_back(cross_at(s));

  std::vector<QScalar> locus;
  for (int line = 0; line < 2; ++line) {
    // p(nu) = c2 nu^2 + c1 nu + c0 through (1, 2, 4); Newton solve.
    QScalar y1 = vals[0][line], y2 = vals[1][line], y4 = vals[2][line];
    QScalar c2 = (y4 - QScalar(3) * y2 + QScalar(2) * y1) / QScalar(6);
    QScalar c1 = (y2 - y1) - QScalar(3) * c2;
    QScalar c0 = y1 - c1 - c2;
    QScalar check = c2 * QScalar(64) + c1 * QScalar(8) + c0;
    if (!(check == vals[3][line])) throw Error("gamma_set_oracle: condition is not quadratic");
    if (c2.is_zero()) throw Error("gamma_set_oracle: degenerate quadratic");
    // c2 nu^2 + c1 nu + c0 = 0  <=>  nu^2 - b nu - c = 0
    QScalar b = -(c1 / c2);
    QScalar c = -(c0 / c2);
    for (const auto& root : solve_quadratic(b, c, q)) {
      if (root.is_zero()) continue;
      bool dup = false;
      for (const auto& r : locus) dup = dup || (r == root);
      if (!dup) locus.push_back(root);
    }
  }
  // Cross-check each root by direct module construction.
  for (const auto& root : locus) {
    if (is_simple(induced_module<QScalar>(root, gamma), q))
      throw Error("gamma_set_oracle: interpolated root is not a non-simple point");
  }
  return locus;
}

}  // namespace parind::dihecke
