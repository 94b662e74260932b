#pragma once

#include "parind/chars.hpp"
#include "parind/fingrp.hpp"

#include <Eigen/Dense>

#include <complex>
#include <vector>

namespace parind::finrep {

using Complex = std::complex<double>;

/// Complex-valued function on a finite group, stored per element index.
struct ClassFunction {
  const fingrp::FiniteGroup* G = nullptr;
  std::vector<Complex> v;

  Complex operator()(uint32_t g) const { return v[g]; }
};

/// (1/|G|) sum chi1(g) conj(chi2(g)). DomainMismatch on different groups.
Complex inner_product(const ClassFunction& chi1, const ClassFunction& chi2);

/// theta evaluated at a field element: exp(2 pi i a t / N) with t the
/// discrete log with respect to the canonical generator.
Complex evaluate_character(const gf::FieldDescriptor& l, const chars::CharExponent& theta,
                           const gf::FieldElement& x);

/// psi(x) = exp(2 pi i Tr_{F_q/F_p}(x) / p), nontrivial additive character.
Complex additive_character(const gf::FieldDescriptor& f, const gf::FieldElement& x);

/// Standard finite induction: Ind_H^G chi at g is (1/|H|) sum over x in G
/// with x^{-1} g x in H of chi(x^{-1} g x). chiH is indexed by G element
/// index (only H positions are read). NotSubgroup if H is not closed.
ClassFunction induced_character(const fingrp::FiniteGroup& G, const std::vector<uint32_t>& H,
                                const std::vector<Complex>& chiH);

/// <Ind_H^G chi, Ind_H^G chi> via Frobenius reciprocity: the induced
/// character is only evaluated on H (on its conjugacy classes), so this
/// stays cheap for groups where a full induced character table would not.
Complex induced_self_pairing(const fingrp::FiniteGroup& G, const std::vector<uint32_t>& H,
                             const std::vector<Complex>& chiH);

/// The cuspidal character of GL_2(F_q) attached to a regular character
/// theta of F_{q^2}: (q-1) theta(z) central, -theta(z) at unipotent type,
/// 0 split, -(theta(x) + theta(x^q)) elliptic. Validated by <chi,chi> = 1
/// and chi(1) = q - 1. NotRegular if theta^q = theta.
ClassFunction cuspidal_character_gl2(const fingrp::FiniteGroup& gl2,
                                     const chars::CharExponent& theta);

struct MatrixRep {
  const fingrp::FiniteGroup* G = nullptr;
  int dim = 0;
  std::vector<Eigen::MatrixXcd> mats;
};

/// Matrix model of the cuspidal via the Gelfand-Graev space Ind_U^G psi and
/// the central isotypic projector (the cuspidal has multiplicity one there).
/// ProjectorRankMismatch if the projector rank is not q - 1.
MatrixRep realize_cuspidal_gl2(const fingrp::FiniteGroup& gl2,
                               const chars::CharExponent& theta);

/// Rank-one case: theta itself as a 1-dimensional representation of
/// GL_1 = l^x.
MatrixRep character_rep_gl1(const fingrp::FiniteGroup& gl1, const chars::CharExponent& theta);

/// rho-bar on the Siegel parabolic: rho(l u) = rep(levi block), trivial on U.
struct ParabolicRep {
  const fingrp::ParabolicData* pd = nullptr;
  int dim = 0;
  std::vector<Eigen::MatrixXcd> rho;       // by P ordinal
  std::vector<Eigen::MatrixXcd> rho_dual;  // g -> transpose(rho(g^{-1}))

  const Eigen::MatrixXcd& dual_at(uint32_t g_index) const;
  Complex trace_at(uint32_t g_index) const;
};

/// LeviMismatch unless rep's group is the GL_n of this parabolic's Levi.
ParabolicRep inflate_to_parabolic(const MatrixRep& rep, const fingrp::ParabolicData& pd);

/// The Gelfand-Graev character Ind_U^G psi of GL_2(F_q).
ClassFunction gelfand_graev_character(const fingrp::FiniteGroup& gl2);

/// The constant c with tau_theta(x) = c (theta(x) + theta^q(x)) on regular
/// elliptic x, measured over all regular (theta, x) pairs; Error if it is
/// not constant across them.
Complex green_constant(const fingrp::FiniteGroup& gl2);

}  // namespace parind::finrep
