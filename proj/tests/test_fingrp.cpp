#include "parind/fingrp.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <random>
#include <set>

using namespace parind;
using namespace parind::fingrp;

TEST_CASE("group orders: closure vs brute force vs formulas") {
  // GU_2(F_9): brute-force filter over all 6561 2x2 matrices over F_9.
  FiniteGroup gu_brute = brute_force_group(FormSpec{FormKind::gu, 1, 3});
  CHECK(gu_brute.order() == 96);
  FiniteGroup gu = build_group(FormSpec{FormKind::gu, 1, 3});
  CHECK(gu.order() == 96);
  for (const Mat& m : gu_brute.elems) CHECK(gu.find(m).has_value());

  // Sp_4(F_3): closure checked against q^4 (q^2-1)(q^4-1).
  FiniteGroup sp = build_group(FormSpec{FormKind::sp, 2, 3});
  CHECK(sp.order() == 51840);
  CHECK(sp.order() == 81ull * 8 * 80);

  // J-orthogonal group at 2n = 2: the full orthogonal group, order 4.
  FiniteGroup oj2 = brute_force_group(FormSpec{FormKind::oj, 1, 3});
  CHECK(oj2.order() == 4);
  CHECK(build_group(FormSpec{FormKind::oj, 1, 3}).order() == 4);

  CHECK(build_group(FormSpec{FormKind::gl, 2, 3}).order() == 48);
  CHECK(build_group(FormSpec{FormKind::gl, 1, 9}).order() == 8);
}

TEST_CASE("every stored element satisfies the form equation") {
  for (FormSpec spec : {FormSpec{FormKind::gu, 1, 3}, FormSpec{FormKind::oj, 2, 3},
                        FormSpec{FormKind::sp, 1, 3}}) {
    FiniteGroup G = build_group(spec);
    for (const Mat& m : G.elems) CHECK(satisfies_form(spec, *G.field, m));
  }
}

TEST_CASE("form matrices") {
  // J^2 = 1 for the hermitian/orthogonal forms; J' is skew with J'^2 = -1.
  for (FormSpec spec : {FormSpec{FormKind::gu, 1, 3}, FormSpec{FormKind::oj, 2, 3}}) {
    auto F = build_entry_field(spec);
    Mat J = form_matrix(spec, *F);
    CHECK(mat_mul(*F, J, J) == mat_identity(*F, spec.dim()));
    CHECK(mat_transpose(J) == J);
  }
  FormSpec sp{FormKind::sp, 2, 3};
  auto F = build_entry_field(sp);
  Mat Jp = form_matrix(sp, *F);
  Mat minus_id = mat_identity(*F, 4);
  for (int i = 0; i < 16; ++i) minus_id.e[i] = F->neg(minus_id.e[i]);
  CHECK(mat_mul(*F, Jp, Jp) == minus_id);
  Mat neg_t = mat_transpose(Jp);
  for (int i = 0; i < 16; ++i) neg_t.e[i] = F->neg(neg_t.e[i]);
  CHECK(neg_t == Jp);
}

TEST_CASE("closure under multiplication and inverse") {
  // exhaustive at order 96
  FiniteGroup gu = build_group(FormSpec{FormKind::gu, 1, 3});
  for (uint32_t a = 0; a < gu.order(); ++a) {
    CHECK(gu.find(mat_inverse(*gu.field, gu.elems[a])).has_value());
    for (uint32_t b = 0; b < gu.order(); ++b)
      CHECK(gu.find(mat_mul(*gu.field, gu.elems[a], gu.elems[b])).has_value());
  }
  // 1000 random pairs at order 51840
  FiniteGroup sp = build_group(FormSpec{FormKind::sp, 2, 3});
  std::mt19937_64 rng(11);
  for (int i = 0; i < 1000; ++i) {
    uint32_t a = rng() % sp.order(), b = rng() % sp.order();
    CHECK(sp.find(mat_mul(*sp.field, sp.elems[a], sp.elems[b])).has_value());
    CHECK(sp.find(mat_inverse(*sp.field, sp.elems[a])).has_value());
  }
}

TEST_CASE("entry-field involution") {
  auto F = build_entry_field(FormSpec{FormKind::gu, 1, 3});
  for (int x = 0; x < F->size; ++x) {
    CHECK(F->bar(F->bar(static_cast<uint8_t>(x))) == x);  // involution
    // bar fixes exactly the subfield F_q
    if (x < 3) CHECK(F->bar(static_cast<uint8_t>(x)) == x);
  }
  int fixed = 0;
  for (int x = 0; x < F->size; ++x)
    if (F->bar(static_cast<uint8_t>(x)) == x) ++fixed;
  CHECK(fixed == 3);
}

TEST_CASE("caps and bad generators") {
  CHECK_THROWS_AS(build_group(FormSpec{FormKind::gu, 2, 3}), TooLargeError);  // ~52M
  BuildOptions tight;
  tight.order_cap = 100;
  CHECK_THROWS_AS(build_group(FormSpec{FormKind::sp, 2, 3}, tight), TooLargeError);
}

TEST_CASE("siegel parabolic of GU_2(F_9)") {
  FiniteGroup G = build_group(FormSpec{FormKind::gu, 1, 3});
  ParabolicData pd = siegel_parabolic(G);
  CHECK(pd.P.size() == 24);
  CHECK(pd.L.size() == 8);  // F_9^x embedded
  CHECK(pd.U.size() == 3);  // trace-zero line
  CHECK(pd.num_double_cosets() == 2);
  CHECK(parahoric_index(pd, pd.coset_id[G.index_of(form_matrix(G.form, *G.field))]) == 3);
}

TEST_CASE("siegel parabolic of Sp_4(F_3)") {
  FiniteGroup G = build_group(FormSpec{FormKind::sp, 2, 3});
  ParabolicData pd = siegel_parabolic(G);
  CHECK(pd.P.size() == 1296);  // |GL_2(F_3)| * 27
  CHECK(pd.L.size() == 48);
  CHECK(pd.U.size() == 27);  // q^3 symmetric matrices
  uint32_t w = G.index_of(form_matrix(G.form, *G.field));
  CHECK(parahoric_index(pd, pd.coset_id[w]) == 27);
}

TEST_CASE("double cosets: partition, sizes, canonical representatives") {
  FiniteGroup G = build_group(FormSpec{FormKind::gu, 1, 3});
  ParabolicData pd = siegel_parabolic(G);
  const auto& inv = G.inverses();

  uint64_t total = 0;
  for (uint32_t c = 0; c < pd.num_double_cosets(); ++c) {
    total += pd.coset_elems[c].size();
    // |PwP| = |P| * [P : P cap wPw^{-1}] with the index counted directly.
    uint32_t w = pd.coset_rep[c];
    uint64_t stab = 0;
    for (uint32_t p : pd.P) {
      uint32_t tw = G.mul(G.mul(inv[w], p), w);
      if (pd.p_ordinal[tw] >= 0) ++stab;
    }
    CHECK(pd.coset_elems[c].size() == pd.P.size() * pd.P.size() / stab);
  }
  CHECK(total == G.order());

  // g in P has the identity representative.
  for (uint32_t p : pd.P) CHECK(double_coset_of(pd, p) == 0);
  // p w0 p' lands in w0's coset.
  uint32_t w0 = G.index_of(form_matrix(G.form, *G.field));
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 50; ++i) {
    uint32_t p = pd.P[rng() % pd.P.size()];
    uint32_t pp = pd.P[rng() % pd.P.size()];
    CHECK(double_coset_of(pd, G.mul(G.mul(p, w0), pp)) == double_coset_of(pd, w0));
  }
  CHECK(double_coset_of(pd, w0) != 0);

  // Stored factorizations reproduce each element.
  for (uint32_t g = 0; g < G.order(); ++g) {
    uint32_t rebuilt =
        G.mul(G.mul(pd.fact_left[g], pd.coset_rep[pd.coset_id[g]]), pd.fact_right[g]);
    CHECK(rebuilt == g);
    CHECK(pd.p_ordinal[pd.fact_left[g]] >= 0);
    CHECK(pd.p_ordinal[pd.fact_right[g]] >= 0);
  }
}

TEST_CASE("Levi projection is a surjective homomorphism with kernel U") {
  FiniteGroup G = build_group(FormSpec{FormKind::sp, 2, 3});
  ParabolicData pd = siegel_parabolic(G);
  FiniteGroup gl = build_group(levi_gl_spec(G.form));

  std::set<uint32_t> image;
  uint64_t kernel = 0;
  for (uint32_t p : pd.P) {
    Mat block = levi_block(pd, p);
    auto idx = gl.find(block);
    REQUIRE(idx.has_value());
    image.insert(*idx);
    if (*idx == 0) ++kernel;
  }
  CHECK(image.size() == gl.order());
  CHECK(kernel == pd.U.size());

  std::mt19937_64 rng(5);
  for (int i = 0; i < 1000; ++i) {
    uint32_t a = pd.P[rng() % pd.P.size()];
    uint32_t b = pd.P[rng() % pd.P.size()];
    Mat lhs = levi_block(pd, G.mul(a, b));
    Mat rhs = mat_mul(*G.field, levi_block(pd, a), levi_block(pd, b));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("determinant distribution of the J-orthogonal group") {
  FiniteGroup G = build_group(FormSpec{FormKind::oj, 2, 3});
  CHECK(G.order() == 1152);
  auto dist = determinant_distribution(G);
  REQUIRE(dist.size() == 2);  // +1 and -1, each half: full O, not SO
  CHECK(dist[0].second == 576);
  CHECK(dist[1].second == 576);
}

TEST_CASE("group cache round-trip and invalidation") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "parind_cache_test";
  fs::create_directories(dir);
  FormSpec spec{FormKind::gu, 1, 3};
  FiniteGroup G = build_group(spec);
  std::string path = (dir / cache_file_name(spec)).string();
  save_group_cache(G, path);

  auto loaded = load_group_cache(spec, path);
  REQUIRE(loaded.has_value());
  CHECK(loaded->order() == G.order());
  for (size_t i = 0; i < G.elems.size(); ++i) CHECK(loaded->elems[i] == G.elems[i]);

  // wrong spec key: miss
  CHECK_FALSE(load_group_cache(FormSpec{FormKind::oj, 1, 3}, path).has_value());

  // stale magic: miss (self-invalidation)
  {
    std::FILE* f = std::fopen(path.c_str(), "r+b");
    REQUIRE(f != nullptr);
    std::fputc('X', f);
    std::fclose(f);
  }
  CHECK_FALSE(load_group_cache(spec, path).has_value());
  fs::remove_all(dir);
}
