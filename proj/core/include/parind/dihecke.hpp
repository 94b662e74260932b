#pragma once

#include "parind/errors.hpp"
#include "parind/qscalar.hpp"

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace parind::dihecke {

/// Reduced word in the infinite dihedral group on generators s_0, s_1. A
/// reduced word is an alternating string, so (length, first letter) is a
/// complete description. The empty word has len = 0.
struct DihedralWord {
  uint32_t len = 0;
  uint8_t first = 0;

  uint8_t letter(uint32_t t) const { return (t % 2 == 0) ? first : 1 - first; }

  friend bool operator==(DihedralWord a, DihedralWord b) {
    return a.len == b.len && (a.len == 0 || a.first == b.first);
  }
  friend bool operator<(DihedralWord a, DihedralWord b) {
    if (a.len != b.len) return a.len < b.len;
    if (a.len == 0) return false;
    return a.first < b.first;
  }
};

// Scalar backend hooks: exact Q(sqrt(q)) and complex floats share the
// algebra code below through these two overload sets.
inline bool scalar_vanishes(const QScalar& s, double) { return s.is_zero(); }
inline bool scalar_vanishes(const std::complex<double>& s, double tol) { return std::abs(s) < tol; }
inline QScalar scalar_inverse(const QScalar& s) { return s.inverse(); }
inline std::complex<double> scalar_inverse(const std::complex<double>& s) {
  if (s == std::complex<double>(0.0)) throw ZeroScalarError("inverse of zero scalar");
  return 1.0 / s;
}

/// Element of the Hecke algebra with relation g_i^2 = (gamma - 1/gamma) g_i + 1,
/// in the T_w basis over reduced dihedral words.
template <class S>
struct HeckeElement {
  std::map<DihedralWord, S> coeffs;
  S gamma{};
  double tol = 1e-12;  // zero-coefficient cleanup threshold (float backend)

  S delta() const { return gamma - scalar_inverse(gamma); }

  void add_term(DihedralWord w, const S& c) {
    auto it = coeffs.find(w);
    if (it == coeffs.end()) {
      if (!scalar_vanishes(c, tol)) coeffs.emplace(w, c);
      return;
    }
    it->second += c;
    if (scalar_vanishes(it->second, tol)) coeffs.erase(it);
  }

  S coeff(DihedralWord w) const {
    auto it = coeffs.find(w);
    return it == coeffs.end() ? S{} : it->second;
  }

  bool same_parameter(const HeckeElement& o) const {
    return scalar_vanishes(gamma - o.gamma, 1e-12);
  }
};

template <class S>
HeckeElement<S> hecke_zero(const S& gamma) {
  HeckeElement<S> h;
  h.gamma = gamma;
  return h;
}

template <class S>
HeckeElement<S> hecke_identity(const S& gamma) {
  HeckeElement<S> h = hecke_zero(gamma);
  h.add_term(DihedralWord{}, S{1});
  return h;
}

template <class S>
HeckeElement<S> hecke_generator(const S& gamma, int i) {
  HeckeElement<S> h = hecke_zero(gamma);
  h.add_term(DihedralWord{1, static_cast<uint8_t>(i)}, S{1});
  return h;
}

/// g_i * T_w: T_{s_i w} when the length goes up, else T_{s_i w} + delta T_w.
template <class S>
HeckeElement<S> left_mul_generator(int i, const HeckeElement<S>& x) {
  HeckeElement<S> out = hecke_zero(x.gamma);
  out.tol = x.tol;
  const S d = x.delta();
  for (const auto& [w, c] : x.coeffs) {
    if (w.len == 0 || w.first != i) {
      DihedralWord up{w.len + 1, static_cast<uint8_t>(i)};
      out.add_term(up, c);
    } else {
      DihedralWord down{w.len - 1, w.len >= 2 ? static_cast<uint8_t>(1 - i) : uint8_t{0}};
      out.add_term(down, c);
      out.add_term(w, c * d);
    }
  }
  return out;
}

template <class S>
HeckeElement<S> hecke_scale(const S& c, const HeckeElement<S>& x) {
  HeckeElement<S> out = hecke_zero(x.gamma);
  out.tol = x.tol;
  for (const auto& [w, cw] : x.coeffs) out.add_term(w, c * cw);
  return out;
}

template <class S>
HeckeElement<S> hecke_add(const HeckeElement<S>& x, const HeckeElement<S>& y) {
  if (!x.same_parameter(y)) throw ParameterMismatchError("HeckeElement: gamma mismatch");
  HeckeElement<S> out = x;
  for (const auto& [w, c] : y.coeffs) out.add_term(w, c);
  return out;
}

template <class S>
HeckeElement<S> hecke_multiply(const HeckeElement<S>& x, const HeckeElement<S>& y) {
  if (!x.same_parameter(y)) throw ParameterMismatchError("HeckeElement: gamma mismatch");
  HeckeElement<S> out = hecke_zero(x.gamma);
  out.tol = x.tol;
  for (const auto& [w, c] : x.coeffs) {
    // T_w * y with T_w = g_{i_1} ... g_{i_len}: apply generators right to left.
    HeckeElement<S> acc = y;
    for (uint32_t t = w.len; t-- > 0;) acc = left_mul_generator<S>(w.letter(t), acc);
    for (const auto& [v, cv] : acc.coeffs) out.add_term(v, c * cv);
  }
  return out;
}

/// g_i^{-1} = g_i - delta.
template <class S>
HeckeElement<S> generator_inverse(const S& gamma, int i) {
  HeckeElement<S> h = hecke_generator(gamma, i);
  h.add_term(DihedralWord{}, -(h.delta()));
  return h;
}

/// X^k with X = g_base g_{1-base} (base = 0 gives the canonical X = g_0 g_1).
template <class S>
HeckeElement<S> laurent_embed(const S& gamma, long k, int base = 0) {
  if (k >= 0) {
    HeckeElement<S> h = hecke_zero(gamma);
    h.add_term(DihedralWord{static_cast<uint32_t>(2 * k), static_cast<uint8_t>(base)}, S{1});
    return h;
  }
  // X^{-1} = g_{1-base}^{-1} g_base^{-1}
  HeckeElement<S> xinv =
      hecke_multiply(generator_inverse(gamma, 1 - base), generator_inverse(gamma, base));
  HeckeElement<S> acc = hecke_identity(gamma);
  for (long i = 0; i < -k; ++i) acc = hecke_multiply(acc, xinv);
  return acc;
}

/// Laurent coefficients of h = sum_k X^k (c_k + d_k g_base): freeness of the
/// algebra as a rank-2 module over C[X^{+-1}] with basis {1, g_base}.
template <class S>
struct LaurentDecomposition {
  std::map<long, S> c;  // coefficient of X^k
  std::map<long, S> d;  // coefficient of X^k g_base
};

template <class S>
LaurentDecomposition<S> laurent_decompose(HeckeElement<S> h, int base = 0) {
  LaurentDecomposition<S> out;
  while (!h.coeffs.empty()) {
    auto it = std::prev(h.coeffs.end());  // leading word in (len, first) order
    DihedralWord w = it->first;
    S c = it->second;
    long k;
    bool gen_part;
    if (w.len % 2 == 0) {
      gen_part = false;
      k = (w.len == 0 || w.first == base) ? w.len / 2 : -static_cast<long>(w.len / 2);
    } else {
      gen_part = true;
      k = (w.first == base) ? (w.len - 1) / 2 : -static_cast<long>((w.len + 1) / 2);
    }
    HeckeElement<S> monom = laurent_embed(h.gamma, k, base);
    if (gen_part) monom = hecke_multiply(monom, hecke_generator(h.gamma, base));
    if (!(std::prev(monom.coeffs.end())->first == w))
      throw Error("laurent_decompose: leading-word bookkeeping failed");
    (gen_part ? out.d : out.c)[k] += c;
    h = hecke_add(h, hecke_scale(-c, monom));
  }
  return out;
}

template <class S>
HeckeElement<S> laurent_recompose(const S& gamma, const LaurentDecomposition<S>& dec,
                                  int base = 0) {
  HeckeElement<S> h = hecke_zero(gamma);
  for (const auto& [k, c] : dec.c) h = hecke_add(h, hecke_scale(c, laurent_embed(gamma, k, base)));
  for (const auto& [k, d] : dec.d) {
    auto m = hecke_multiply(laurent_embed(gamma, k, base), hecke_generator(gamma, base));
    h = hecke_add(h, hecke_scale(d, m));
  }
  return h;
}

/// One-dimensional module C_lambda over the Laurent subalgebra: alpha acts
/// by nu_zeta. This is the image m_L(pi nu) of the inducing datum.
template <class S>
struct SimpleLaurentModule {
  S nu_zeta;
  S act(long k) const {
    S r{1};
    S x = nu_zeta;
    if (k < 0) {
      x = scalar_inverse(nu_zeta);
      k = -k;
    }
    for (long i = 0; i < k; ++i) r *= x;
    return r;
  }
};

template <class S>
SimpleLaurentModule<S> simple_laurent_module(const S& nu_zeta) {
  if (scalar_vanishes(nu_zeta, 1e-300)) throw ZeroScalarError("simple module needs nu != 0");
  return SimpleLaurentModule<S>{nu_zeta};
}

/// The induced module Hom_{C[X^{+-1}]}(A, C_nu) in the functional basis
/// {psi(1), psi(g_base)}; m0/m1 are the actions of g_0, g_1.
template <class S>
struct TwoDimModule {
  S m0[2][2];
  S m1[2][2];
  S gamma;
  S nu;
};

/// Evaluate psi(h) for psi with coordinates (x0, x1) = (psi(1), psi(g_base)).
template <class S>
S module_functional(const SimpleLaurentModule<S>& mod, const LaurentDecomposition<S>& dec,
                    const S& x0, const S& x1) {
  S r{};
  for (const auto& [k, c] : dec.c) r += c * mod.act(k) * x0;
  for (const auto& [k, d] : dec.d) r += d * mod.act(k) * x1;
  return r;
}

/// Build the 2-dimensional module by decomposing h * g_i over the Laurent
/// basis; the action is (g . psi)(h) = psi(h g).
template <class S>
TwoDimModule<S> induced_module(const S& nu_zeta, const S& gamma, int base = 0) {
  auto mod = simple_laurent_module(nu_zeta);
  TwoDimModule<S> out;
  out.gamma = gamma;
  out.nu = nu_zeta;
  HeckeElement<S> basis[2] = {hecke_identity(gamma), hecke_generator(gamma, base)};
  for (int gen = 0; gen <= 1; ++gen) {
    auto& m = (gen == 0) ? out.m0 : out.m1;
    for (int row = 0; row < 2; ++row) {
      auto dec =
          laurent_decompose(hecke_multiply(basis[row], hecke_generator(gamma, gen)), base);
      // psi(h g) = dec evaluated at coordinates; extract linear coefficients.
      m[row][0] = module_functional(mod, dec, S{1}, S{0});
      m[row][1] = module_functional(mod, dec, S{0}, S{1});
    }
  }
  return out;
}

template <class S>
std::vector<std::array<S, 2>> matrix_eigenvectors(const S m[2][2], int64_t q, double tol);

/// False iff some line is invariant under both generator actions; every such
/// line is spanned by an eigenvector of M0.
template <class S>
bool is_simple(const TwoDimModule<S>& m, int64_t q_hint = 0, double tol = 1e-9);

/// All nu for which the induced module is non-simple, solved exactly over
/// Q(sqrt(q)). Re-derives the Gamma set from the eigenvector condition.
std::vector<QScalar> gamma_set_oracle(const QScalar& gamma, int64_t q);

}  // namespace parind::dihecke
