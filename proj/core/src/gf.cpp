#include "parind/gf.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

namespace parind::gf {

namespace {

using Poly = std::vector<int64_t>;  // low-to-high, no trailing-zero guarantee

int deg(const Poly& a) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    if (a[i] != 0) return i;
  return -1;
}

Poly poly_mul(const Poly& a, const Poly& b, int64_t p) {
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  return r;
}

// Reduce a modulo the monic modulus m.
Poly poly_mod(Poly a, const Poly& m, int64_t p) {
  int dm = deg(m);
  for (int i = deg(a); i >= dm; --i) {
    int64_t c = a[i] % p;
    if (c == 0) continue;
    for (int j = 0; j <= dm; ++j) {
      a[i - dm + j] = ((a[i - dm + j] - c * m[j]) % p + p) % p;
    }
  }
  a.resize(dm);
  return a;
}

// Remainder of a by an arbitrary nonzero divisor d (F_p[x] division).
Poly poly_rem(Poly a, const Poly& d, int64_t p) {
  int dd = deg(d);
  int64_t lead = d[dd];
  // lead^{-1} mod p
  int64_t inv = 1, base = ((lead % p) + p) % p, e = p - 2;
  while (e) {
    if (e & 1) inv = inv * base % p;
    base = base * base % p;
    e >>= 1;
  }
  for (int i = deg(a); i >= dd; --i) {
    int64_t c = a[i] % p;
    if (c == 0) continue;
    int64_t f = c * inv % p;
    for (int j = 0; j <= dd; ++j) {
      a[i - dd + j] = ((a[i - dd + j] - f * d[j]) % p + p) % p;
    }
  }
  if (dd == 0)
    a.clear();
  else
    a.resize(dd);
  return a;
}

bool divides(const Poly& d, const Poly& a, int64_t p) {
  Poly r = poly_rem(a, d, p);
  return deg(r) < 0;
}

// Trial factorization: no monic divisor of degree 1..k/2.
bool is_irreducible(const Poly& f, int64_t p) {
  int k = deg(f);
  if (k <= 0) return false;
  if (k == 1) return true;
  for (int d = 1; d <= k / 2; ++d) {
    int64_t count = ipow64(p, d);
    Poly cand(d + 1, 0);
    cand[d] = 1;
    for (int64_t n = 0; n < count; ++n) {
      int64_t t = n;
      for (int i = 0; i < d; ++i) {
        cand[i] = t % p;
        t /= p;
      }
      if (divides(cand, f, p)) return false;
    }
  }
  return true;
}

std::vector<int64_t> prime_factors(int64_t n) {
  std::vector<int64_t> fs;
  for (int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      fs.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) fs.push_back(n);
  return fs;
}

struct ElementKey {
  size_t operator()(const std::vector<int64_t>& v) const {
    size_t h = 1469598103934665603ull;
    for (int64_t c : v) {
      h ^= static_cast<size_t>(c) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

bool is_prime(int64_t n) {
  if (n < 2) return false;
  for (int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_odd_prime_power(int64_t q) {
  if (q < 3 || q % 2 == 0) return false;
  for (int64_t p = 3; p * p <= q; p += 2) {
    if (q % p == 0) {
      while (q % p == 0) q /= p;
      return q == 1;
    }
  }
  return true;  // q itself is prime
}

FieldDescriptor build_field(int64_t p, int k) {
  if (!is_prime(p) || p < 3) throw NonPrimeError("build_field: p must be an odd prime, got " + std::to_string(p));
  if (k < 1 || k > kMaxDegree)
    throw DegreeTooLargeError("build_field: degree " + std::to_string(k) + " outside [1, " +
                              std::to_string(kMaxDegree) + "]");
  FieldDescriptor f;
  f.p = p;
  f.k = k;
  // Scan monic candidates in lexicographic order of (c0, c1, ..., c_{k-1}).
  int64_t count = ipow64(p, k);
  Poly cand(k + 1, 0);
  cand[k] = 1;
  for (int64_t n = 0; n < count; ++n) {
    int64_t t = n;
    for (int i = k - 1; i >= 0; --i) {
      cand[i] = t % p;
      t /= p;
    }
    if (is_irreducible(cand, p)) {
      f.modulus = cand;
      return f;
    }
  }
  throw Error("build_field: no irreducible polynomial found");  // unreachable
}

FieldElement zero(const FieldDescriptor& f) { return FieldElement{std::vector<int64_t>(f.k, 0)}; }

FieldElement one(const FieldDescriptor& f) { return from_int(f, 1); }

FieldElement from_int(const FieldDescriptor& f, int64_t c) {
  FieldElement x = zero(f);
  x.coeffs[0] = ((c % f.p) + f.p) % f.p;
  return x;
}

bool is_zero(const FieldElement& x) {
  return std::all_of(x.coeffs.begin(), x.coeffs.end(), [](int64_t c) { return c == 0; });
}

FieldElement add(const FieldDescriptor& f, const FieldElement& a, const FieldElement& b) {
  FieldElement r = a;
  for (int i = 0; i < f.k; ++i) r.coeffs[i] = (r.coeffs[i] + b.coeffs[i]) % f.p;
  return r;
}

FieldElement sub(const FieldDescriptor& f, const FieldElement& a, const FieldElement& b) {
  FieldElement r = a;
  for (int i = 0; i < f.k; ++i) r.coeffs[i] = ((r.coeffs[i] - b.coeffs[i]) % f.p + f.p) % f.p;
  return r;
}

FieldElement neg(const FieldDescriptor& f, const FieldElement& a) { return sub(f, zero(f), a); }

FieldElement mul(const FieldDescriptor& f, const FieldElement& a, const FieldElement& b) {
  Poly prod = poly_mul(a.coeffs, b.coeffs, f.p);
  return FieldElement{poly_mod(std::move(prod), f.modulus, f.p)};
}

FieldElement pow(const FieldDescriptor& f, const FieldElement& a, BigInt e) {
  if (e < 0) return pow(f, inv(f, a), -e);
  FieldElement r = one(f);
  FieldElement base = a;
  while (e > 0) {
    if ((e & 1) != 0) r = mul(f, r, base);
    base = mul(f, base, base);
    e >>= 1;
  }
  return r;
}

FieldElement inv(const FieldDescriptor& f, const FieldElement& a) {
  if (is_zero(a)) throw ZeroScalarError("gf::inv: zero element");
  return pow(f, a, BigInt(f.order()) - 2);
}

FieldElement frobenius(const FieldDescriptor& f, const FieldElement& x, int e) {
  FieldElement r = x;
  for (int i = 0; i < e; ++i) r = pow(f, r, BigInt(f.p));
  return r;
}

int64_t element_index(const FieldDescriptor& f, const FieldElement& x) {
  int64_t n = 0;
  for (int i = f.k - 1; i >= 0; --i) n = n * f.p + x.coeffs[i];
  return n;
}

FieldElement element_at(const FieldDescriptor& f, int64_t index) {
  FieldElement x = zero(f);
  for (int i = 0; i < f.k; ++i) {
    x.coeffs[i] = index % f.p;
    index /= f.p;
  }
  return x;
}

int64_t multiplicative_order(const FieldDescriptor& f, const FieldElement& x) {
  if (is_zero(x)) throw ZeroScalarError("gf::multiplicative_order: zero element");
  int64_t n = f.order() - 1;
  int64_t ord = n;
  for (int64_t q : prime_factors(n)) {
    while (ord % q == 0 && pow(f, x, BigInt(ord / q)) == one(f)) ord /= q;
  }
  return ord;
}

FieldElement primitive_generator(const FieldDescriptor& f) {
  int64_t n = f.order() - 1;
  for (int64_t i = 1; i < f.order(); ++i) {
    FieldElement x = element_at(f, i);
    if (multiplicative_order(f, x) == n) return x;
  }
  throw Error("primitive_generator: cyclic group without generator");  // unreachable
}

int64_t discrete_log(const FieldDescriptor& f, const FieldElement& x, const FieldElement& g) {
  if (is_zero(x)) throw NotInGroupError("discrete_log: 0 is not in the unit group");
  int64_t n = f.order() - 1;
  int64_t m = static_cast<int64_t>(std::ceil(std::sqrt(static_cast<double>(n))));
  std::unordered_map<std::vector<int64_t>, int64_t, ElementKey> baby;
  baby.reserve(static_cast<size_t>(m));
  FieldElement e = one(f);
  for (int64_t j = 0; j < m; ++j) {
    baby.emplace(e.coeffs, j);
    e = mul(f, e, g);
  }
  FieldElement giant_step = inv(f, pow(f, g, BigInt(m)));
  FieldElement cur = x;
  for (int64_t i = 0; i <= m; ++i) {
    auto it = baby.find(cur.coeffs);
    if (it != baby.end()) {
      int64_t t = (i * m + it->second) % n;
      return t;
    }
    cur = mul(f, cur, giant_step);
  }
  throw NotInGroupError("discrete_log: base is not a generator");
}

}  // namespace parind::gf
