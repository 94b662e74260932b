#pragma once

#include "parind/errors.hpp"
#include "parind/numeric.hpp"

#include <cstdint>
#include <vector>

namespace parind::gf {

bool is_prime(int64_t n);

/// q = p^r for an odd prime p; the residue characteristic 2 is excluded
/// throughout.
bool is_odd_prime_power(int64_t q);

/// Finite field F_{p^k} presented as F_p[x] modulo a fixed monic irreducible.
///
/// The modulus is the lexicographically smallest monic irreducible of its
/// degree (coefficients compared low-to-high over 0..p-1), so two builds of
/// the same (p, k) are bit-identical.
struct FieldDescriptor {
  int64_t p = 0;
  int k = 0;
  std::vector<int64_t> modulus;  // length k+1, low-to-high, monic

  int64_t order() const { return ipow64(p, k); }
  bool operator==(const FieldDescriptor& o) const {
    return p == o.p && k == o.k && modulus == o.modulus;
  }
};

/// Element as a residue-class polynomial: coefficient vector of length k,
/// entries in [0, p).
struct FieldElement {
  std::vector<int64_t> coeffs;
  bool operator==(const FieldElement& o) const { return coeffs == o.coeffs; }
};

inline constexpr int kMaxDegree = 12;

FieldDescriptor build_field(int64_t p, int k);  // NonPrime, DegreeTooLarge

FieldElement zero(const FieldDescriptor& f);
FieldElement one(const FieldDescriptor& f);
FieldElement from_int(const FieldDescriptor& f, int64_t c);  // constant c mod p

bool is_zero(const FieldElement& x);

FieldElement add(const FieldDescriptor& f, const FieldElement& a, const FieldElement& b);
FieldElement sub(const FieldDescriptor& f, const FieldElement& a, const FieldElement& b);
FieldElement neg(const FieldDescriptor& f, const FieldElement& a);
FieldElement mul(const FieldDescriptor& f, const FieldElement& a, const FieldElement& b);
FieldElement inv(const FieldDescriptor& f, const FieldElement& a);
FieldElement pow(const FieldDescriptor& f, const FieldElement& a, BigInt e);

/// x |-> x^{p^e}, by repeated p-th powering. frobenius(f, x, k) == x.
FieldElement frobenius(const FieldDescriptor& f, const FieldElement& x, int e);

/// Canonical enumeration: index n <-> coefficients = base-p digits of n,
/// little-endian (coeffs[i] = digit i).
int64_t element_index(const FieldDescriptor& f, const FieldElement& x);
FieldElement element_at(const FieldDescriptor& f, int64_t index);

/// Multiplicative order of a nonzero element.
int64_t multiplicative_order(const FieldDescriptor& f, const FieldElement& x);

/// First element in canonical enumeration order with order p^k - 1.
FieldElement primitive_generator(const FieldDescriptor& f);

/// Baby-step/giant-step: t in [0, p^k - 1) with g^t = x. NotInGroup if x = 0.
int64_t discrete_log(const FieldDescriptor& f, const FieldElement& x, const FieldElement& g);

}  // namespace parind::gf
