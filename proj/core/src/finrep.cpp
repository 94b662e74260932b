#include "parind/finrep.hpp"

#include <cmath>
#include <numbers>

namespace parind::finrep {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Complex unit_phase(double frac) { return {std::cos(kTwoPi * frac), std::sin(kTwoPi * frac)}; }

void require_prime_entry_field(const fingrp::FiniteGroup& G, const char* who) {
  if (G.field->desc.k != 1)
    throw DomainMismatchError(std::string(who) + ": entry field must be a prime field");
}

std::vector<uint32_t> upper_unitriangular(const fingrp::FiniteGroup& gl2) {
  std::vector<uint32_t> U;
  for (uint32_t i = 0; i < gl2.order(); ++i) {
    const auto& m = gl2.elems[i];
    uint8_t one = static_cast<uint8_t>(gf::element_index(gl2.field->desc, gf::one(gl2.field->desc)));
    if (m.at(0, 0) == one && m.at(1, 1) == one && m.at(1, 0) == 0) U.push_back(i);
  }
  return U;
}

}  // namespace

Complex inner_product(const ClassFunction& chi1, const ClassFunction& chi2) {
  if (chi1.G != chi2.G) throw DomainMismatchError("inner_product: different domain groups");
  Complex acc = 0;
  for (size_t i = 0; i < chi1.v.size(); ++i) acc += chi1.v[i] * std::conj(chi2.v[i]);
  return acc / static_cast<double>(chi1.v.size());
}

Complex evaluate_character(const gf::FieldDescriptor& l, const chars::CharExponent& theta,
                           const gf::FieldElement& x) {
  static thread_local const gf::FieldDescriptor* cached_field = nullptr;
  static thread_local std::vector<int64_t> dlog_table;
  if (cached_field == nullptr || !(*cached_field == l)) {
    // Precompute all discrete logs once per field (desk scale).
    dlog_table.assign(static_cast<size_t>(l.order()), -1);
    gf::FieldElement g = gf::primitive_generator(l);
    gf::FieldElement cur = gf::one(l);
    for (int64_t t = 0; t < l.order() - 1; ++t) {
      dlog_table[gf::element_index(l, cur)] = t;
      cur = gf::mul(l, cur, g);
    }
    static thread_local gf::FieldDescriptor cache_storage;
    cache_storage = l;
    cached_field = &cache_storage;
  }
  int64_t t = dlog_table[gf::element_index(l, x)];
  if (t < 0) throw NotInGroupError("evaluate_character: zero element");
  int64_t N = theta.N();
  if (N != l.order() - 1) throw DomainMismatchError("evaluate_character: theta modulus mismatch");
  return unit_phase(static_cast<double>(mulmod64(theta.a, t, N)) / static_cast<double>(N));
}

Complex additive_character(const gf::FieldDescriptor& f, const gf::FieldElement& x) {
  // Tr_{F_q/F_p}(x) = sum of Frobenius translates; lands in the prime field.
  gf::FieldElement tr = gf::zero(f);
  gf::FieldElement cur = x;
  for (int i = 0; i < f.k; ++i) {
    tr = gf::add(f, tr, cur);
    cur = gf::frobenius(f, cur, 1);
  }
  for (int i = 1; i < f.k; ++i)
    if (tr.coeffs[i] != 0) throw Error("additive_character: trace left the prime field");
  return unit_phase(static_cast<double>(tr.coeffs[0]) / static_cast<double>(f.p));
}

namespace {

void require_subgroup(const fingrp::FiniteGroup& G, const std::vector<uint32_t>& H) {
  if (H.empty() || H[0] != 0) {
    bool has_identity = false;
    for (uint32_t h : H) has_identity = has_identity || (h == 0);
    if (!has_identity) throw NotSubgroupError("subgroup must contain the identity");
  }
  // Full closure check at desk scale, sampled above it.
  const uint64_t full_limit = 4'000'000;
  if (static_cast<uint64_t>(H.size()) * H.size() <= full_limit) {
    std::unordered_map<uint32_t, char> members;
    for (uint32_t h : H) members[h] = 1;
    for (uint32_t a : H)
      for (uint32_t b : H)
        if (!members.count(G.mul(a, b)))
          throw NotSubgroupError("subgroup indices are not closed under multiplication");
  }
}

}  // namespace

ClassFunction induced_character(const fingrp::FiniteGroup& G, const std::vector<uint32_t>& H,
                                const std::vector<Complex>& chiH) {
  require_subgroup(G, H);
  std::vector<char> in_H(G.order(), 0);
  for (uint32_t h : H) in_H[h] = 1;
  const auto& inv = G.inverses();
  ClassFunction out;
  out.G = &G;
  out.v.assign(G.order(), Complex{0});
  for (uint32_t g = 0; g < G.order(); ++g) {
    Complex acc = 0;
    for (uint32_t x = 0; x < G.order(); ++x) {
      uint32_t c = G.mul(G.mul(inv[x], g), x);
      if (in_H[c]) acc += chiH[c];
    }
    out.v[g] = acc / static_cast<double>(H.size());
  }
  return out;
}

Complex induced_self_pairing(const fingrp::FiniteGroup& G, const std::vector<uint32_t>& H,
                             const std::vector<Complex>& chiH) {
  require_subgroup(G, H);
  std::vector<char> in_H(G.order(), 0);
  for (uint32_t h : H) in_H[h] = 1;
  const auto& inv = G.inverses();
  // <Ind chi, Ind chi>_G = <Res_H Ind chi, chi>_H, summed over H-classes.
  Complex acc = 0;
  for (const auto& cls : fingrp::conjugacy_classes(G, H)) {
    uint32_t rep = cls[0];
    Complex ind_value = 0;
    for (uint32_t x = 0; x < G.order(); ++x) {
      uint32_t c = G.mul(G.mul(inv[x], rep), x);
      if (in_H[c]) ind_value += chiH[c];
    }
    ind_value /= static_cast<double>(H.size());
    acc += static_cast<double>(cls.size()) * ind_value * std::conj(chiH[rep]);
  }
  return acc / static_cast<double>(H.size());
}

ClassFunction cuspidal_character_gl2(const fingrp::FiniteGroup& gl2,
                                     const chars::CharExponent& theta) {
  require_prime_entry_field(gl2, "cuspidal_character_gl2");
  if (gl2.form.kind != fingrp::FormKind::gl || gl2.form.n != 2)
    throw DomainMismatchError("cuspidal_character_gl2: expected a GL_2 group");
  int64_t p = gl2.field->desc.p;
  if (!chars::is_regular(theta))
    throw NotRegularError("cuspidal_character_gl2: theta is not regular");

  gf::FieldDescriptor l = gf::build_field(p, 2);
  auto theta_at = [&](const gf::FieldElement& x) { return evaluate_character(l, theta, x); };
  auto embed = [&](uint8_t value) { return gf::from_int(l, value); };

  int64_t half = (p + 1) / 2;  // 2^{-1} mod p
  auto is_square_mod_p = [&](int64_t d) {
    for (int64_t s = 0; s < p; ++s)
      if ((s * s) % p == d) return true;
    return false;
  };

  ClassFunction chi;
  chi.G = &gl2;
  chi.v.resize(gl2.order());
  for (uint32_t i = 0; i < gl2.order(); ++i) {
    const auto& m = gl2.elems[i];
    int64_t a = m.at(0, 0), b = m.at(0, 1), c = m.at(1, 0), d = m.at(1, 1);
    int64_t tr = (a + d) % p;
    int64_t det = (((a * d - b * c) % p) + p) % p;
    int64_t disc = (((tr * tr - 4 * det) % p) + p) % p;
    if (b == 0 && c == 0 && a == d) {
      chi.v[i] = static_cast<double>(p - 1) * theta_at(embed(static_cast<uint8_t>(a)));
    } else if (disc == 0) {
      int64_t eig = (tr * half) % p;
      chi.v[i] = -theta_at(embed(static_cast<uint8_t>(eig)));
    } else if (is_square_mod_p(disc)) {
      chi.v[i] = 0;
    } else {
      // Elliptic: a root z of x^2 - tr x + det in F_{p^2}; Galois-symmetric.
      gf::FieldElement z{};
      bool found = false;
      for (int64_t idx = 0; idx < l.order() && !found; ++idx) {
        gf::FieldElement cand = gf::element_at(l, idx);
        gf::FieldElement val = gf::add(
            l,
            gf::sub(l, gf::mul(l, cand, cand),
                    gf::mul(l, gf::from_int(l, tr), cand)),
            gf::from_int(l, det));
        if (gf::is_zero(val)) {
          z = cand;
          found = true;
        }
      }
      if (!found) throw Error("cuspidal_character_gl2: elliptic root not found");
      chi.v[i] = -(theta_at(z) + theta_at(gf::frobenius(l, z, 1)));
    }
  }

  // Validate the hard-coded table: irreducible and of cuspidal dimension.
  Complex norm = inner_product(chi, chi);
  if (std::abs(norm - Complex{1}) > 1e-6)
    throw Error("cuspidal_character_gl2: <chi,chi> != 1");
  if (std::abs(chi.v[0] - Complex{static_cast<double>(p - 1)}) > 1e-9)
    throw Error("cuspidal_character_gl2: chi(1) != q-1");
  return chi;
}

MatrixRep realize_cuspidal_gl2(const fingrp::FiniteGroup& gl2,
                               const chars::CharExponent& theta) {
  require_prime_entry_field(gl2, "realize_cuspidal_gl2");
  if (gl2.order() > 1000)
    throw TooLargeError("realize_cuspidal_gl2: |GL_2| above the desk-scale cap");
  ClassFunction chi = cuspidal_character_gl2(gl2, theta);
  int64_t p = gl2.field->desc.p;
  const auto& inv = gl2.inverses();

  std::vector<uint32_t> U = upper_unitriangular(gl2);
  // psi value of a unitriangular element, by its corner entry.
  auto psi_of = [&](uint32_t u) {
    return unit_phase(static_cast<double>(gl2.elems[u].at(0, 1)) / static_cast<double>(p));
  };

  // Right cosets U r: deterministic minimal-index representatives.
  std::vector<int32_t> coset_of(gl2.order(), -1);
  std::vector<uint32_t> reps;
  for (uint32_t g = 0; g < gl2.order(); ++g) {
    if (coset_of[g] >= 0) continue;
    int32_t id = static_cast<int32_t>(reps.size());
    reps.push_back(g);
    for (uint32_t u : U) coset_of[gl2.mul(u, g)] = id;
  }
  size_t dim_gg = reps.size();

  // pi(g) e_r = psi(s g r^{-1}) e_s with s the representative of U r g^{-1}.
  auto gg_matrix = [&](uint32_t g) {
    Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(dim_gg, dim_gg);
    for (size_t r = 0; r < dim_gg; ++r) {
      uint32_t rg_inv = gl2.mul(reps[r], inv[g]);
      uint32_t s = static_cast<uint32_t>(coset_of[rg_inv]);
      uint32_t u2 = gl2.mul(gl2.mul(reps[s], g), inv[reps[r]]);
      M(s, r) = psi_of(u2);
    }
    return M;
  };

  // Central isotypic projector e_chi = (chi(1)/|G|) sum chi(g^{-1}) pi(g).
  Eigen::MatrixXcd proj = Eigen::MatrixXcd::Zero(dim_gg, dim_gg);
  for (uint32_t g = 0; g < gl2.order(); ++g) proj += chi.v[inv[g]] * gg_matrix(g);
  proj *= chi.v[0].real() / static_cast<double>(gl2.order());

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(proj);
  std::vector<int> image_cols;
  for (int i = 0; i < es.eigenvalues().size(); ++i)
    if (es.eigenvalues()(i) > 0.5) image_cols.push_back(i);
  if (static_cast<int64_t>(image_cols.size()) != p - 1)
    throw ProjectorRankMismatchError("projector image dimension " +
                                     std::to_string(image_cols.size()) + " != q-1");
  Eigen::MatrixXcd basis(dim_gg, image_cols.size());
  for (size_t c = 0; c < image_cols.size(); ++c) basis.col(c) = es.eigenvectors().col(image_cols[c]);

  MatrixRep rep;
  rep.G = &gl2;
  rep.dim = static_cast<int>(image_cols.size());
  rep.mats.resize(gl2.order());
  for (uint32_t g = 0; g < gl2.order(); ++g) {
    rep.mats[g] = basis.adjoint() * gg_matrix(g) * basis;
    if (std::abs(rep.mats[g].trace() - chi.v[g]) > 1e-9)
      throw Error("realize_cuspidal_gl2: model trace disagrees with the character");
  }
  return rep;
}

MatrixRep character_rep_gl1(const fingrp::FiniteGroup& gl1, const chars::CharExponent& theta) {
  if (gl1.form.kind != fingrp::FormKind::gl || gl1.form.n != 1)
    throw DomainMismatchError("character_rep_gl1: expected a GL_1 group");
  MatrixRep rep;
  rep.G = &gl1;
  rep.dim = 1;
  rep.mats.resize(gl1.order());
  const auto& l = gl1.field->desc;
  for (uint32_t g = 0; g < gl1.order(); ++g) {
    gf::FieldElement x = gf::element_at(l, gl1.elems[g].at(0, 0));
    rep.mats[g] = Eigen::MatrixXcd::Constant(1, 1, evaluate_character(l, theta, x));
  }
  return rep;
}

const Eigen::MatrixXcd& ParabolicRep::dual_at(uint32_t g_index) const {
  int32_t ord = pd->p_ordinal[g_index];
  if (ord < 0) throw NotInGroupError("ParabolicRep: element outside P");
  return rho_dual[ord];
}

Complex ParabolicRep::trace_at(uint32_t g_index) const {
  int32_t ord = pd->p_ordinal[g_index];
  if (ord < 0) throw NotInGroupError("ParabolicRep: element outside P");
  return rho[ord].trace();
}

ParabolicRep inflate_to_parabolic(const MatrixRep& rep, const fingrp::ParabolicData& pd) {
  fingrp::FormSpec expected = fingrp::levi_gl_spec(pd.G->form);
  if (!(rep.G->form == expected))
    throw LeviMismatchError("inflate_to_parabolic: representation domain is not the Levi GL_n");
  ParabolicRep out;
  out.pd = &pd;
  out.dim = rep.dim;
  out.rho.resize(pd.P.size());
  out.rho_dual.resize(pd.P.size());
  const auto& gl_inv = rep.G->inverses();
  for (size_t i = 0; i < pd.P.size(); ++i) {
    fingrp::Mat block = fingrp::levi_block(pd, pd.P[i]);
    auto idx = rep.G->find(block);
    if (!idx) throw LeviMismatchError("inflate_to_parabolic: Levi block outside GL_n");
    out.rho[i] = rep.mats[*idx];
    out.rho_dual[i] = rep.mats[gl_inv[*idx]].transpose();
  }
  return out;
}

ClassFunction gelfand_graev_character(const fingrp::FiniteGroup& gl2) {
  require_prime_entry_field(gl2, "gelfand_graev_character");
  int64_t p = gl2.field->desc.p;
  std::vector<uint32_t> U = upper_unitriangular(gl2);
  std::vector<Complex> psi(gl2.order(), Complex{0});
  for (uint32_t u : U)
    psi[u] = unit_phase(static_cast<double>(gl2.elems[u].at(0, 1)) / static_cast<double>(p));
  return induced_character(gl2, U, psi);
}

Complex green_constant(const fingrp::FiniteGroup& gl2) {
  require_prime_entry_field(gl2, "green_constant");
  int64_t p = gl2.field->desc.p;
  gf::FieldDescriptor l = gf::build_field(p, 2);
  chars::Case rc = chars::Case::ramified;

  std::vector<chars::CharExponent> regular =
      chars::enumerate_characters(p, 2, rc, chars::Filter::regular);

  // Regular elliptic x in GL_2(F_p): irreducible characteristic polynomial.
  std::vector<uint32_t> elliptic;
  for (uint32_t i = 0; i < gl2.order(); ++i) {
    const auto& m = gl2.elems[i];
    int64_t tr = (m.at(0, 0) + m.at(1, 1)) % p;
    int64_t det = (((static_cast<int64_t>(m.at(0, 0)) * m.at(1, 1) -
                     static_cast<int64_t>(m.at(0, 1)) * m.at(1, 0)) %
                    p) +
                   p) %
                  p;
    int64_t disc = (((tr * tr - 4 * det) % p) + p) % p;
    bool square = false;
    for (int64_t s = 0; s < p && !square; ++s) square = ((s * s) % p == disc);
    if (!square) elliptic.push_back(i);
  }

  bool have = false;
  Complex c_value = 0;
  for (const auto& theta : regular) {
    ClassFunction chi = cuspidal_character_gl2(gl2, theta);
    for (uint32_t x : elliptic) {
      const auto& m = gl2.elems[x];
      int64_t tr = (m.at(0, 0) + m.at(1, 1)) % p;
      int64_t det = (((static_cast<int64_t>(m.at(0, 0)) * m.at(1, 1) -
                       static_cast<int64_t>(m.at(0, 1)) * m.at(1, 0)) %
                      p) +
                     p) %
                    p;
      gf::FieldElement z{};
      bool found = false;
      for (int64_t idx = 0; idx < l.order() && !found; ++idx) {
        gf::FieldElement cand = gf::element_at(l, idx);
        gf::FieldElement val =
            gf::add(l,
                    gf::sub(l, gf::mul(l, cand, cand),
                            gf::mul(l, gf::from_int(l, tr), cand)),
                    gf::from_int(l, det));
        if (gf::is_zero(val)) {
          z = cand;
          found = true;
        }
      }
      if (!found) throw Error("green_constant: elliptic root not found");
      Complex orbit_sum = evaluate_character(l, theta, z) +
                          evaluate_character(l, theta, gf::frobenius(l, z, 1));
      Complex chi_val = chi.v[x];
      if (std::abs(orbit_sum) < 1e-9) {
        if (std::abs(chi_val) > 1e-9)
          throw Error("green_constant: character nonzero where the orbit sum vanishes");
        continue;
      }
      Complex c = chi_val / orbit_sum;
      if (have && std::abs(c - c_value) > 1e-9)
        throw Error("green_constant: constant varies across (theta, x)");
      c_value = c;
      have = true;
    }
  }
  if (!have) throw Error("green_constant: no usable (theta, x) pair");
  return c_value;
}

}  // namespace parind::finrep
