#pragma once

#include "parind/finrep.hpp"

#include <Eigen/Dense>

#include <complex>
#include <vector>

namespace parind::finhecke {

using Complex = std::complex<double>;

/// Solution space of rho^(x) A = A rho^(w^{-1} x w) over x in P cap wPw^{-1},
/// i.e. Hom of the w-twisted dual with the dual. Dimension 0 or 1 in every
/// target case.
std::vector<Eigen::MatrixXcd> intertwiner_space(const finrep::ParabolicRep& prep,
                                                uint32_t coset);

/// Sum of intertwiner dimensions over all double cosets; equals the Mackey
/// pairing <Ind tr rho, Ind tr rho> computed independently in finrep.
int hecke_dimension(const finrep::ParabolicRep& prep);

/// Element of H(G, rho): support one double coset P w P, value at w a matrix
/// A, extended by f(p w p') = rho^(p) A rho^(p').
struct EquivariantFunction {
  const finrep::ParabolicRep* prep = nullptr;
  uint32_t coset = 0;  // double coset id
  Eigen::MatrixXcd A;
};

/// The unique (up to sign) basis element with A . rho^((w^2)^{-1}) . A = 1,
/// sign fixed by making the first nonzero entry of A positive.
EquivariantFunction normalized_basis_element(const finrep::ParabolicRep& prep, uint32_t coset);

/// f evaluated anywhere (zero off the support coset).
Eigen::MatrixXcd value_at(const EquivariantFunction& f, uint32_t g);

/// (f * g)(x) with vol(P) = 1 counting measure: (1/|P|) sum_y f(y) g(y^{-1} x).
Eigen::MatrixXcd convolve_at(const EquivariantFunction& f, const EquivariantFunction& g,
                             uint32_t x);

/// f * f expanded in the basis {identity, f}: coefficients (a, b) with
/// f*f = a f + b 1. BasisExpressFailure if the result leaks outside the span.
struct BasisExpansion {
  Complex a;
  Complex b;
};
BasisExpansion convolve_self(const EquivariantFunction& f);

/// Quadratic relation data: f*f = a f + b, lambda the root ratio -mu+/mu-
/// arranged >= 1, t the scaling with (t f)^2 = (lambda - 1)(t f) + lambda.
struct QuadRelation {
  double a = 0;
  double b = 0;
  double lambda = 0;
  double t = 0;
};

/// RelationMismatch if lambda differs from expected_lambda by more than tol.
QuadRelation quadratic_relation(const finrep::ParabolicRep& prep, uint32_t coset,
                                double expected_lambda, double tol = 1e-6);

}  // namespace parind::finhecke
