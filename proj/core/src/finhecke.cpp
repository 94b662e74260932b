#include "parind/finhecke.hpp"

#include <cmath>

namespace parind::finhecke {

namespace {

using fingrp::FiniteGroup;
using fingrp::ParabolicData;

// Indices x in P with w^{-1} x w in P.
std::vector<std::pair<uint32_t, uint32_t>> twisted_pairs(const ParabolicData& pd, uint32_t w) {
  const FiniteGroup& G = *pd.G;
  const auto& inv = G.inverses();
  std::vector<std::pair<uint32_t, uint32_t>> out;
  for (uint32_t x : pd.P) {
    uint32_t tw = G.mul(G.mul(inv[w], x), w);
    if (pd.p_ordinal[tw] >= 0) out.emplace_back(x, tw);
  }
  return out;
}

}  // namespace

std::vector<Eigen::MatrixXcd> intertwiner_space(const finrep::ParabolicRep& prep,
                                                uint32_t coset) {
  const ParabolicData& pd = *prep.pd;
  uint32_t w = pd.coset_rep[coset];
  int d = prep.dim;
  auto pairs = twisted_pairs(pd, w);
  // Stack rho^(x) A - A rho^(w^{-1} x w) = 0 as a linear system in vec(A):
  // (rho^(x) (x) I - I (x) rho^(tw)^T) vec_row(A) = 0 with vec_row the
  // row-major unrolling A_{ij} -> index i*d + j.
  Eigen::MatrixXcd system = Eigen::MatrixXcd::Zero(pairs.size() * d * d, d * d);
  Eigen::Index row = 0;
  for (const auto& [x, tw] : pairs) {
    const Eigen::MatrixXcd& left = prep.dual_at(x);
    const Eigen::MatrixXcd& right = prep.dual_at(tw);
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        for (int k = 0; k < d; ++k) {
          // d/d A_{kj}: left_{ik}; d/d A_{ik}: -right_{kj}
          system(row, k * d + j) += left(i, k);
          system(row, i * d + k) -= right(k, j);
        }
        ++row;
      }
    }
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(system, Eigen::ComputeThinV);
  double scale = svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
  std::vector<Eigen::MatrixXcd> basis;
  for (int c = 0; c < svd.matrixV().cols(); ++c) {
    if (c < svd.singularValues().size() && svd.singularValues()(c) > 1e-9 * (1 + scale)) continue;
    Eigen::MatrixXcd A(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) A(i, j) = svd.matrixV()(i * d + j, c);
    basis.push_back(A);
  }
  return basis;
}

int hecke_dimension(const finrep::ParabolicRep& prep) {
  int dim = 0;
  for (uint32_t c = 0; c < prep.pd->num_double_cosets(); ++c)
    dim += static_cast<int>(intertwiner_space(prep, c).size());
  return dim;
}

EquivariantFunction normalized_basis_element(const finrep::ParabolicRep& prep, uint32_t coset) {
  const ParabolicData& pd = *prep.pd;
  const FiniteGroup& G = *pd.G;
  auto basis = intertwiner_space(prep, coset);
  if (basis.size() != 1)
    throw Error("normalized_basis_element: intertwiner space has dimension " +
                std::to_string(basis.size()));
  Eigen::MatrixXcd A = basis[0];

  // Normalize S = A rho^((w^2)^{-1}) A to the identity; S is scalar by
  // Schur. w^2 lands in P for the Weyl elements in play here.
  uint32_t w = pd.coset_rep[coset];
  uint32_t w2 = G.mul(w, w);
  if (pd.p_ordinal[w2] < 0)
    throw Error("normalized_basis_element: w^2 outside P, normalization undefined");
  uint32_t w2inv = G.inverses()[w2];
  Eigen::MatrixXcd S = A * prep.dual_at(w2inv) * A;
  Complex s = S(0, 0);
  if ((S - s * Eigen::MatrixXcd::Identity(prep.dim, prep.dim)).norm() > 1e-9 * (1 + std::abs(s)))
    throw Error("normalized_basis_element: A rho^((w^2)^{-1}) A is not scalar");
  A /= std::sqrt(s);
  // Deterministic sign: first nonzero entry positive (real part, then imag).
  for (int i = 0; i < A.size(); ++i) {
    Complex v = A(i / prep.dim, i % prep.dim);
    if (std::abs(v) > 1e-9) {
      if (v.real() < -1e-12 || (std::abs(v.real()) <= 1e-12 && v.imag() < 0)) A = -A;
      break;
    }
  }
  return EquivariantFunction{&prep, coset, A};
}

Eigen::MatrixXcd value_at(const EquivariantFunction& f, uint32_t g) {
  const ParabolicData& pd = *f.prep->pd;
  if (pd.coset_id[g] != f.coset) return Eigen::MatrixXcd::Zero(f.prep->dim, f.prep->dim);
  return f.prep->dual_at(pd.fact_left[g]) * f.A * f.prep->dual_at(pd.fact_right[g]);
}

Eigen::MatrixXcd convolve_at(const EquivariantFunction& f, const EquivariantFunction& g,
                             uint32_t x) {
  const ParabolicData& pd = *f.prep->pd;
  if (g.prep->pd != &pd) throw DomainMismatchError("convolve_at: different parabolic data");
  const FiniteGroup& G = *pd.G;
  const auto& inv = G.inverses();
  int d = f.prep->dim;
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(d, d);
  // Support of f only; f(y) g(y^{-1} x).
  for (uint32_t y : pd.coset_elems[f.coset]) {
    uint32_t rest = G.mul(inv[y], x);
    if (pd.coset_id[rest] != g.coset) continue;
    acc += value_at(f, y) * value_at(g, rest);
  }
  return acc / static_cast<double>(pd.P.size());
}

BasisExpansion convolve_self(const EquivariantFunction& f) {
  const ParabolicData& pd = *f.prep->pd;
  int d = f.prep->dim;
  double fscale = f.A.norm();
  BasisExpansion out{0, 0};
  for (uint32_t c = 0; c < pd.num_double_cosets(); ++c) {
    uint32_t rep = pd.coset_rep[c];
    Eigen::MatrixXcd val = convolve_at(f, f, rep);
    if (rep == 0) {
      // Identity coset: must be b * rho^(1) = b * I.
      Complex b = val(0, 0);
      if ((val - b * Eigen::MatrixXcd::Identity(d, d)).norm() > 1e-7 * (1 + std::abs(b)))
        throw BasisExpressFailureError("f*f at the identity is not scalar");
      out.b = b;
    } else if (c == f.coset) {
      // Must be a * A.
      Complex a = 0;
      double best = 0;
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
          if (std::abs(f.A(i, j)) > best) {
            best = std::abs(f.A(i, j));
            a = val(i, j) / f.A(i, j);
          }
      if ((val - a * f.A).norm() > 1e-7 * (1 + std::abs(a)) * (1 + fscale))
        throw BasisExpressFailureError("f*f on the support coset is not proportional to A");
      out.a = a;
    } else {
      if (val.norm() > 1e-7 * (1 + fscale) * (1 + fscale))
        throw BasisExpressFailureError("f*f leaks outside span{1, f}");
    }
  }
  return out;
}

QuadRelation quadratic_relation(const finrep::ParabolicRep& prep, uint32_t coset,
                                double expected_lambda, double tol) {
  EquivariantFunction f = normalized_basis_element(prep, coset);
  BasisExpansion e = convolve_self(f);
  if (std::abs(e.a.imag()) > 1e-6 || std::abs(e.b.imag()) > 1e-6)
    throw Error("quadratic_relation: coefficients are not real");
  if (e.a.real() < 0) e.a = -e.a;  // flip f -> -f: keeps A^2 = 1, arranges a > 0
  QuadRelation rel;
  rel.a = e.a.real();
  rel.b = e.b.real();
  if (rel.b <= 0) throw Error("quadratic_relation: b <= 0");
  double disc = std::sqrt(rel.a * rel.a + 4 * rel.b);
  double mu_plus = (rel.a + disc) / 2;
  double mu_minus = (rel.a - disc) / 2;
  rel.lambda = -mu_plus / mu_minus;
  if (rel.lambda < 1) rel.lambda = 1 / rel.lambda;
  rel.t = (rel.lambda - 1) / rel.a;
  if (std::abs(rel.lambda - expected_lambda) > tol)
    throw RelationMismatchError("lambda = " + std::to_string(rel.lambda) + " but expected " +
                                std::to_string(expected_lambda));
  return rel;
}

}  // namespace parind::finhecke
