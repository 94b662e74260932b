#include "parind/finhecke.hpp"

#include <doctest.h>

#include <memory>
#include <random>

using namespace parind;
using namespace parind::finhecke;
using fingrp::FiniteGroup;
using fingrp::FormKind;
using fingrp::FormSpec;

namespace {

struct Fixture {
  FiniteGroup G;
  FiniteGroup gl;
  fingrp::ParabolicData pd;
  finrep::MatrixRep rep;
  finrep::ParabolicRep prep;
  uint32_t weyl = 0;
};

std::unique_ptr<Fixture> make_fixture(FormSpec spec, int64_t theta_a) {
  auto f = std::make_unique<Fixture>();
  f->G = fingrp::build_group(spec);
  f->gl = fingrp::build_group(fingrp::levi_gl_spec(spec));
  f->pd = fingrp::siegel_parabolic(f->G);
  if (spec.kind == FormKind::gu) {
    f->rep = finrep::character_rep_gl1(
        f->gl, chars::make_char(spec.q, 1, chars::Case::unramified, theta_a));
  } else {
    f->rep = finrep::realize_cuspidal_gl2(
        f->gl, chars::make_char(spec.q, 2, chars::Case::ramified, theta_a));
  }
  f->prep = finrep::inflate_to_parabolic(f->rep, f->pd);
  f->weyl = f->pd.coset_id[f->G.index_of(fingrp::form_matrix(spec, *f->G.field))];
  return f;
}

const Fixture& sp4_theta2() {
  static auto f = make_fixture(FormSpec{FormKind::sp, 2, 3}, 2);
  return *f;
}

// Brute-force convolution oracle on full value maps over the whole group.
using ValueMap = std::vector<Eigen::MatrixXcd>;

ValueMap full_values(const EquivariantFunction& f) {
  const auto& pd = *f.prep->pd;
  ValueMap out(pd.G->order());
  for (uint32_t g = 0; g < pd.G->order(); ++g) out[g] = value_at(f, g);
  return out;
}

ValueMap brute_convolve(const fingrp::FiniteGroup& G, size_t psize, const ValueMap& a,
                        const ValueMap& b) {
  const auto& inv = G.inverses();
  ValueMap out(G.order());
  for (uint32_t x = 0; x < G.order(); ++x) {
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(a[0].rows(), a[0].cols());
    for (uint32_t y = 0; y < G.order(); ++y) acc += a[y] * b[G.mul(inv[y], x)];
    out[x] = acc / static_cast<double>(psize);
  }
  return out;
}

double map_dist(const ValueMap& a, const ValueMap& b) {
  double d = 0;
  for (size_t i = 0; i < a.size(); ++i) d = std::max(d, (a[i] - b[i]).norm());
  return d;
}

}  // namespace

TEST_CASE("intertwiner spaces over GU_2(F_9)") {
  auto f2 = make_fixture(FormSpec{FormKind::gu, 1, 3}, 2);
  // identity coset: Schur line
  CHECK(intertwiner_space(f2->prep, 0).size() == 1);
  // Weyl coset: dimension 1 exactly when theta^{q+1} = 1
  CHECK(intertwiner_space(f2->prep, f2->weyl).size() == 1);
  auto f1 = make_fixture(FormSpec{FormKind::gu, 1, 3}, 1);
  CHECK(intertwiner_space(f1->prep, f1->weyl).empty());
  CHECK(hecke_dimension(f2->prep) == 2);
  CHECK(hecke_dimension(f1->prep) == 1);
}

TEST_CASE("hecke dimension matches the character pairing for every theta") {
  for (int64_t a = 0; a < 8; ++a) {
    auto f = make_fixture(FormSpec{FormKind::gu, 1, 3}, a);
    int dim = hecke_dimension(f->prep);
    CHECK(dim == ((4 * a) % 8 == 0 ? 2 : 1));
    std::vector<finrep::Complex> chi(f->G.order(), 0.0);
    for (size_t i = 0; i < f->pd.P.size(); ++i) chi[f->pd.P[i]] = f->prep.rho[i].trace();
    CHECK(std::abs(finrep::induced_self_pairing(f->G, f->pd.P, chi) -
                   finrep::Complex(dim)) < 1e-9);
  }
}

TEST_CASE("GU_2 relation and brute-force convolution agreement") {
  auto f = make_fixture(FormSpec{FormKind::gu, 1, 3}, 2);
  auto phi = normalized_basis_element(f->prep, f->weyl);

  // identity * phi = phi, exhaustively
  EquivariantFunction e{&f->prep, 0, Eigen::MatrixXcd::Identity(1, 1)};
  for (uint32_t x = 0; x < f->G.order(); ++x) {
    CHECK((convolve_at(e, phi, x) - value_at(phi, x)).norm() < 1e-12);
    CHECK((convolve_at(phi, e, x) - value_at(phi, x)).norm() < 1e-12);
  }

  // library convolution vs whole-group brute force
  auto vphi = full_values(phi);
  auto brute = brute_convolve(f->G, f->pd.P.size(), vphi, vphi);
  for (uint32_t c = 0; c < f->pd.num_double_cosets(); ++c) {
    uint32_t r = f->pd.coset_rep[c];
    CHECK((convolve_at(phi, phi, r) - brute[r]).norm() < 1e-9);
  }

  auto exp = convolve_self(phi);
  CHECK(std::abs(exp.a - finrep::Complex(-2)) < 1e-9);  // sign fixed at relation level
  CHECK(std::abs(exp.b - finrep::Complex(3)) < 1e-9);

  auto rel = quadratic_relation(f->prep, f->weyl, 3.0);
  CHECK(rel.a == doctest::Approx(2).epsilon(1e-9));
  CHECK(rel.b == doctest::Approx(3).epsilon(1e-9));
  CHECK(rel.lambda == doctest::Approx(3).epsilon(1e-9));
  CHECK(rel.t == doctest::Approx(1).epsilon(1e-9));

  // associativity through the brute-force oracle: every triple over the
  // computed basis {1, phi}, both association orders
  auto ve = full_values(e);
  const ValueMap* basis[2] = {&ve, &vphi};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) {
        auto ij = brute_convolve(f->G, f->pd.P.size(), *basis[i], *basis[j]);
        auto jk = brute_convolve(f->G, f->pd.P.size(), *basis[j], *basis[k]);
        auto left = brute_convolve(f->G, f->pd.P.size(), ij, *basis[k]);
        auto right = brute_convolve(f->G, f->pd.P.size(), *basis[i], jk);
        CHECK(map_dist(left, right) < 1e-9);
      }

  // lambda is scale invariant; raw coefficients scale as (ta, t^2 b)
  EquivariantFunction scaled{&f->prep, f->weyl, 2.0 * phi.A};
  auto exp2 = convolve_self(scaled);
  CHECK(std::abs(exp2.a - 2.0 * exp.a) < 1e-9);
  CHECK(std::abs(exp2.b - 4.0 * exp.b) < 1e-9);
}

TEST_CASE("well-definedness: factorization-independent values") {
  auto f = make_fixture(FormSpec{FormKind::gu, 1, 3}, 2);
  auto phi = normalized_basis_element(f->prep, f->weyl);
  const auto& pd = f->pd;
  std::mt19937_64 rng(42);
  uint32_t w = pd.coset_rep[f->weyl];
  for (int i = 0; i < 1000; ++i) {
    uint32_t p = pd.P[rng() % pd.P.size()];
    uint32_t pp = pd.P[rng() % pd.P.size()];
    uint32_t g = f->G.mul(f->G.mul(p, w), pp);
    Eigen::MatrixXcd direct =
        f->prep.dual_at(p) * phi.A * f->prep.dual_at(pp);
    CHECK((value_at(phi, g) - direct).norm() < 1e-9);
  }
}

TEST_CASE("Sp_4(F_3) ramified model") {
  const Fixture& f = sp4_theta2();
  CHECK(hecke_dimension(f.prep) == 2);
  CHECK(fingrp::parahoric_index(f.pd, f.weyl) == 27);

  // rho-dual acts as +1 at the central -1 (the ramified w_1-side conclusion).
  fingrp::Mat minus = fingrp::mat_identity(*f.G.field, 4);
  for (int i = 0; i < 16; ++i) minus.e[i] = f.G.field->neg(minus.e[i]);
  uint32_t minus_idx = f.G.index_of(minus);
  CHECK((f.prep.dual_at(minus_idx) - Eigen::MatrixXcd::Identity(2, 2)).norm() < 1e-12);

  auto rel = quadratic_relation(f.prep, f.weyl, 3.0);
  CHECK(rel.a == doctest::Approx(6).epsilon(1e-6));
  CHECK(rel.b == doctest::Approx(27).epsilon(1e-6));
  CHECK(rel.lambda == doctest::Approx(3).epsilon(1e-6));

  // expecting any other lambda is a loud failure
  CHECK_THROWS_AS(quadratic_relation(f.prep, f.weyl, 9.0), RelationMismatchError);
}

TEST_CASE("Sp_4 dimension by exponent: 2 iff theta regular with theta^{q+1} = 1") {
  for (int64_t a : {1, 2, 3, 5, 6, 7}) {  // the regular exponents mod 8
    auto f = make_fixture(FormSpec{FormKind::sp, 2, 3}, a);
    int dim = hecke_dimension(f->prep);
    CHECK(dim == ((4 * a) % 8 == 0 ? 2 : 1));
  }
}

TEST_CASE("relations hold off the q=3 targets") {
  // GU_2(F_25): lambda = q^n = 5, raw (q-1, q) on the Weyl coset.
  auto gu5 = make_fixture(FormSpec{FormKind::gu, 1, 5}, 4);
  CHECK(gu5->G.order() == 720);
  CHECK(hecke_dimension(gu5->prep) == 2);
  auto rel5 = quadratic_relation(gu5->prep, gu5->weyl, 5.0);
  CHECK(rel5.a == doctest::Approx(4).epsilon(1e-9));
  CHECK(rel5.b == doctest::Approx(5).epsilon(1e-9));

  // O_4(F_5) with the 4-dimensional cuspidal of GL_2(F_5).
  auto oj5 = make_fixture(FormSpec{FormKind::oj, 2, 5}, 4);
  CHECK(oj5->G.order() == 28800);
  CHECK(oj5->rep.dim == 4);
  auto rel = quadratic_relation(oj5->prep, oj5->weyl, 5.0);
  CHECK(rel.a == doctest::Approx(4).epsilon(1e-6));
  CHECK(rel.b == doctest::Approx(5).epsilon(1e-6));
  CHECK(rel.lambda == doctest::Approx(5).epsilon(1e-6));
}

TEST_CASE("J-orthogonal side carries the same relation") {
  auto f = make_fixture(FormSpec{FormKind::oj, 2, 3}, 2);
  CHECK(f->G.order() == 1152);
  auto rel = quadratic_relation(f->prep, f->weyl, 3.0);
  CHECK(rel.a == doctest::Approx(2).epsilon(1e-6));
  CHECK(rel.b == doctest::Approx(3).epsilon(1e-6));
  CHECK(rel.lambda == doctest::Approx(3).epsilon(1e-6));
}
