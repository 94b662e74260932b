#include "parind/finrep.hpp"

#include <doctest.h>

#include <random>

using namespace parind;
using namespace parind::finrep;
using fingrp::FiniteGroup;
using fingrp::FormKind;
using fingrp::FormSpec;

namespace {

const FiniteGroup& gl2_f3() {
  static FiniteGroup G = fingrp::build_group(FormSpec{FormKind::gl, 2, 3});
  return G;
}

ClassFunction trivial_char(const FiniteGroup& G) {
  ClassFunction chi;
  chi.G = &G;
  chi.v.assign(G.order(), Complex{1});
  return chi;
}

std::vector<uint32_t> borel_subgroup(const FiniteGroup& G) {
  std::vector<uint32_t> B;
  for (uint32_t i = 0; i < G.order(); ++i)
    if (G.elems[i].at(1, 0) == 0) B.push_back(i);
  return B;
}

}  // namespace

TEST_CASE("inner products and induction basics") {
  const FiniteGroup& G = gl2_f3();
  auto triv = trivial_char(G);
  CHECK(std::abs(inner_product(triv, triv) - Complex(1)) < 1e-12);

  // Ind from G to itself is the identity.
  std::vector<uint32_t> whole(G.order());
  for (uint32_t i = 0; i < G.order(); ++i) whole[i] = i;
  auto ind = induced_character(G, whole, triv.v);
  for (uint32_t g = 0; g < G.order(); ++g) CHECK(std::abs(ind.v[g] - triv.v[g]) < 1e-12);

  // <Ind_B 1, Ind_B 1> = 2 for the Borel of GL_2(F_3).
  auto B = borel_subgroup(G);
  CHECK(B.size() == 12);
  std::vector<Complex> one(G.order(), Complex{1});
  auto indB = induced_character(G, B, one);
  CHECK(std::abs(indB.v[0] - Complex(4)) < 1e-12);  // index of B
  CHECK(std::abs(inner_product(indB, indB) - Complex(2)) < 1e-9);
  CHECK(std::abs(induced_self_pairing(G, B, one) - Complex(2)) < 1e-9);

  ClassFunction other = trivial_char(G);
  other.G = nullptr;
  CHECK_THROWS_AS(inner_product(triv, other), DomainMismatchError);
  uint32_t non_involution = 0;
  for (uint32_t g = 1; g < G.order(); ++g)
    if (G.mul(g, g) != 0 && G.mul(g, g) != g) {
      non_involution = g;
      break;
    }
  std::vector<uint32_t> not_closed{0, non_involution};
  CHECK_THROWS_AS(induced_character(G, not_closed, one), NotSubgroupError);
}

TEST_CASE("cuspidal character values at q = 3") {
  const FiniteGroup& G = gl2_f3();
  auto theta = chars::make_char(3, 2, chars::Case::ramified, 2);
  auto chi = cuspidal_character_gl2(G, theta);

  CHECK(std::abs(chi.v[0] - Complex(2)) < 1e-12);  // q - 1
  CHECK(std::abs(inner_product(chi, chi) - Complex(1)) < 1e-9);

  // chi at the class of the F_9 generator (trace 2, det 2): -(i + i^3) = 0.
  // chi at its square (trace 0, det 1): -(i^2 + i^6) = 2.
  bool checked_g = false, checked_g2 = false;
  for (uint32_t i = 0; i < G.order(); ++i) {
    const auto& m = G.elems[i];
    int tr = (m.at(0, 0) + m.at(1, 1)) % 3;
    int det = fingrp::mat_det(*G.field, m);
    int disc = ((tr * tr - 4 * det) % 3 + 3) % 3;
    if (disc != 2) continue;  // elliptic classes have non-square discriminant
    if (tr == 2 && det == 2) {
      CHECK(std::abs(chi.v[i]) < 1e-12);
      checked_g = true;
    }
    if (tr == 0 && det == 1) {
      CHECK(std::abs(chi.v[i] - Complex(2)) < 1e-12);
      checked_g2 = true;
    }
  }
  CHECK(checked_g);
  CHECK(checked_g2);

  // class function: constant on conjugacy classes (exhaustive at |G| = 48)
  std::vector<uint32_t> whole(G.order());
  for (uint32_t i = 0; i < G.order(); ++i) whole[i] = i;
  for (const auto& cls : fingrp::conjugacy_classes(G, whole))
    for (uint32_t g : cls) CHECK(std::abs(chi.v[g] - chi.v[cls[0]]) < 1e-12);

  // Galois-orbit well-definedness: theta and theta^q give the same character.
  auto chi_tw = cuspidal_character_gl2(G, chars::galois_twist(theta, 1));
  for (uint32_t g = 0; g < G.order(); ++g) CHECK(std::abs(chi.v[g] - chi_tw.v[g]) < 1e-12);

  CHECK_THROWS_AS(cuspidal_character_gl2(G, chars::make_char(3, 2, chars::Case::ramified, 4)),
                  NotRegularError);
}

TEST_CASE("orthogonality across the three cuspidal classes") {
  const FiniteGroup& G = gl2_f3();
  auto orbits = chars::galois_orbits(3, 2, chars::Case::ramified, true);
  REQUIRE(orbits.size() == 3);
  std::vector<ClassFunction> chis;
  for (const auto& orbit : orbits)
    chis.push_back(
        cuspidal_character_gl2(G, chars::make_char(3, 2, chars::Case::ramified, orbit[0])));
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j)
      CHECK(std::abs(inner_product(chis[i], chis[j]) - Complex(i == j ? 1 : 0)) < 1e-9);
}

TEST_CASE("Gelfand-Graev model") {
  const FiniteGroup& G = gl2_f3();
  auto gg = gelfand_graev_character(G);
  CHECK(std::abs(gg.v[0] - Complex(16)) < 1e-9);  // |G| / q

  auto theta = chars::make_char(3, 2, chars::Case::ramified, 2);
  auto chi = cuspidal_character_gl2(G, theta);
  CHECK(std::abs(inner_product(gg, chi) - Complex(1)) < 1e-9);

  auto rep = realize_cuspidal_gl2(G, theta);
  CHECK(rep.dim == 2);
  // trace identity on all elements
  for (uint32_t g = 0; g < G.order(); ++g)
    CHECK(std::abs(rep.mats[g].trace() - chi.v[g]) < 1e-9);
  // homomorphism property on 1000 random pairs
  std::mt19937_64 rng(777);
  for (int i = 0; i < 1000; ++i) {
    uint32_t a = rng() % G.order(), b = rng() % G.order();
    CHECK((rep.mats[G.mul(a, b)] - rep.mats[a] * rep.mats[b]).norm() < 1e-9);
  }
}

TEST_CASE("additive character") {
  auto f9 = gf::build_field(3, 2);
  for (int64_t i = 0; i < 9; ++i) {
    for (int64_t j = 0; j < 9; ++j) {
      auto x = gf::element_at(f9, i), y = gf::element_at(f9, j);
      CHECK(std::abs(additive_character(f9, gf::add(f9, x, y)) -
                     additive_character(f9, x) * additive_character(f9, y)) < 1e-12);
    }
  }
  bool nontrivial = false;
  for (int64_t i = 0; i < 9; ++i)
    nontrivial =
        nontrivial || std::abs(additive_character(f9, gf::element_at(f9, i)) - Complex(1)) > 0.5;
  CHECK(nontrivial);
}

TEST_CASE("green constant is -1 at q = 3") {
  auto c = green_constant(gl2_f3());
  CHECK(std::abs(c - Complex(-1)) < 1e-9);
}

TEST_CASE("induced pairing over GU_2(F_9) by exponent") {
  FiniteGroup G = fingrp::build_group(FormSpec{FormKind::gu, 1, 3});
  fingrp::ParabolicData pd = fingrp::siegel_parabolic(G);
  FiniteGroup gl1 = fingrp::build_group(fingrp::levi_gl_spec(G.form));
  for (int64_t a = 0; a < 8; ++a) {
    auto theta = chars::make_char(3, 1, chars::Case::unramified, a);
    auto rep = character_rep_gl1(gl1, theta);
    auto prep = inflate_to_parabolic(rep, pd);
    // dim Ind = [G : P] * 1 = 4 and <Ind, Ind> = 2 iff theta^{q+1} = 1.
    std::vector<Complex> chi(G.order(), 0.0);
    for (size_t i = 0; i < pd.P.size(); ++i) chi[pd.P[i]] = prep.rho[i].trace();
    auto full = induced_character(G, pd.P, chi);
    CHECK(std::abs(full.v[0] - Complex(4)) < 1e-9);
    auto pairing = inner_product(full, full);
    int expected = (4 * a) % 8 == 0 ? 2 : 1;
    CHECK(std::abs(pairing - Complex(expected)) < 1e-9);
    CHECK(std::abs(induced_self_pairing(G, pd.P, chi) - Complex(expected)) < 1e-9);
  }
}

TEST_CASE("inflation to the parabolic") {
  FiniteGroup G = fingrp::build_group(FormSpec{FormKind::sp, 2, 3});
  fingrp::ParabolicData pd = fingrp::siegel_parabolic(G);
  FiniteGroup gl2 = fingrp::build_group(fingrp::levi_gl_spec(G.form));
  auto theta = chars::make_char(3, 2, chars::Case::ramified, 2);
  auto rep = realize_cuspidal_gl2(gl2, theta);
  auto prep = inflate_to_parabolic(rep, pd);

  // trivial on U
  for (uint32_t u : pd.U) {
    int32_t ord = pd.p_ordinal[u];
    CHECK((prep.rho[ord] - Eigen::MatrixXcd::Identity(2, 2)).norm() < 1e-12);
  }
  // rho(l) = rep(levi block)
  for (uint32_t l : pd.L) {
    int32_t ord = pd.p_ordinal[l];
    auto idx = gl2.find(fingrp::levi_block(pd, l));
    REQUIRE(idx.has_value());
    CHECK((prep.rho[ord] - rep.mats[*idx]).norm() < 1e-12);
  }
  // homomorphism on P, 1000 random pairs
  std::mt19937_64 rng(31);
  for (int i = 0; i < 1000; ++i) {
    uint32_t a = pd.P[rng() % pd.P.size()];
    uint32_t b = pd.P[rng() % pd.P.size()];
    uint32_t ab = G.mul(a, b);
    CHECK((prep.rho[pd.p_ordinal[ab]] - prep.rho[pd.p_ordinal[a]] * prep.rho[pd.p_ordinal[b]])
              .norm() < 1e-9);
  }

  // a GL_2(F_9) representation cannot inflate to an Sp_4(F_3) parabolic
  FiniteGroup gl_wrong = fingrp::build_group(FormSpec{FormKind::gl, 1, 9});
  auto wrong = character_rep_gl1(gl_wrong, chars::make_char(3, 1, chars::Case::unramified, 1));
  CHECK_THROWS_AS(inflate_to_parabolic(wrong, pd), LeviMismatchError);
}
