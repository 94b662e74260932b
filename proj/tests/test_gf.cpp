#include "parind/gf.hpp"

#include <doctest.h>

#include <random>

using namespace parind;
using namespace parind::gf;

namespace {

// Independent oracle: a monic quadratic over F_p is irreducible iff it has
// no root. Scans tuples (c0, c1) in lexicographic order.
std::vector<int64_t> smallest_irreducible_quadratic(int64_t p) {
  for (int64_t c0 = 0; c0 < p; ++c0) {
    for (int64_t c1 = 0; c1 < p; ++c1) {
      bool has_root = false;
      for (int64_t x = 0; x < p && !has_root; ++x)
        has_root = ((x * x + c1 * x + c0) % p == 0);
      if (!has_root) return {c0, c1, 1};
    }
  }
  return {};
}

// Brute-force multiplicative order.
int64_t order_by_powers(const FieldDescriptor& f, const FieldElement& x) {
  FieldElement cur = x;
  int64_t ord = 1;
  while (!(cur == one(f))) {
    cur = mul(f, cur, x);
    ++ord;
  }
  return ord;
}

}  // namespace

TEST_CASE("build_field picks the canonical modulus") {
  CHECK(build_field(3, 1).modulus == std::vector<int64_t>{0, 1});  // x
  // Frozen from the exhaustive quadratic scan: x^2 + 1 over F_3.
  CHECK(smallest_irreducible_quadratic(3) == std::vector<int64_t>{1, 0, 1});
  CHECK(build_field(3, 2).modulus == std::vector<int64_t>{1, 0, 1});
  CHECK(smallest_irreducible_quadratic(5) == std::vector<int64_t>{1, 1, 1});
  CHECK(build_field(5, 2).modulus == std::vector<int64_t>{1, 1, 1});

  FieldDescriptor f729 = build_field(3, 6);
  CHECK(f729.order() == 729);
  // x^{p^k} = x for every element.
  for (int64_t i = 0; i < 729; ++i) {
    FieldElement x = element_at(f729, i);
    CHECK(pow(f729, x, BigInt(729)) == x);
  }

  // Determinism: two independent builds are bit-identical.
  CHECK(build_field(3, 6).modulus == f729.modulus);
}

TEST_CASE("build_field rejects bad input") {
  CHECK_THROWS_AS(build_field(4, 2), NonPrimeError);
  CHECK_THROWS_AS(build_field(2, 3), NonPrimeError);  // residue characteristic 2 excluded
  CHECK_THROWS_AS(build_field(3, 13), DegreeTooLargeError);
  CHECK_THROWS_AS(build_field(3, 0), DegreeTooLargeError);
}

TEST_CASE("frobenius") {
  FieldDescriptor f9 = build_field(3, 2);
  for (int64_t i = 0; i < 9; ++i) {
    FieldElement x = element_at(f9, i);
    CHECK(frobenius(f9, x, 2) == x);  // full orbit closes
    // square-and-multiply oracle for the p-th power
    CHECK(frobenius(f9, x, 1) == mul(f9, mul(f9, x, x), x));
  }
  FieldDescriptor f3 = build_field(3, 1);
  for (int64_t i = 0; i < 3; ++i) {
    FieldElement x = element_at(f3, i);
    for (int e = 0; e < 5; ++e) CHECK(frobenius(f3, x, e) == x);
  }
}

TEST_CASE("primitive generator is the first in enumeration order") {
  FieldDescriptor f3 = build_field(3, 1);
  CHECK(element_index(f3, primitive_generator(f3)) == 2);

  FieldDescriptor f9 = build_field(3, 2);
  FieldElement g = primitive_generator(f9);
  CHECK(g.coeffs == std::vector<int64_t>{1, 1});  // x + 1
  CHECK(order_by_powers(f9, g) == 8);
  // x itself has order 4 (x^2 = -1), so it must not be chosen.
  FieldElement x = element_at(f9, 3);
  CHECK(order_by_powers(f9, x) == 4);
  CHECK(mul(f9, x, x) == from_int(f9, -1));
  // (x+1)^4 = 2 != 1
  CHECK(pow(f9, g, BigInt(4)) == from_int(f9, 2));
}

TEST_CASE("discrete log") {
  FieldDescriptor f9 = build_field(3, 2);
  FieldElement g = primitive_generator(f9);
  CHECK(discrete_log(f9, g, g) == 1);
  CHECK(discrete_log(f9, one(f9), g) == 0);
  // Brute-force power table oracle: (x+1)^4 = 2.
  FieldElement two = from_int(f9, 2);
  int64_t expect = -1;
  FieldElement cur = one(f9);
  for (int64_t t = 0; t < 8; ++t) {
    if (cur == two) expect = t;
    cur = mul(f9, cur, g);
  }
  CHECK(expect == 4);
  CHECK(discrete_log(f9, two, g) == 4);
  CHECK_THROWS_AS(discrete_log(f9, zero(f9), g), NotInGroupError);
  // base of order 4 cannot reach a primitive element
  FieldElement x = element_at(f9, 3);
  CHECK_THROWS_AS(discrete_log(f9, g, x), NotInGroupError);
}

TEST_CASE("field axioms and dlog round-trip, exhaustive at small orders") {
  for (auto [p, k] : {std::pair{3, 2}, std::pair{5, 2}, std::pair{3, 6}, std::pair{7, 1}}) {
    FieldDescriptor f = build_field(p, k);
    int64_t size = f.order();
    FieldElement g = primitive_generator(f);

    std::mt19937_64 rng(12345);
    auto rand_elem = [&]() { return element_at(f, static_cast<int64_t>(rng() % size)); };
    for (int trial = 0; trial < 200; ++trial) {
      FieldElement a = rand_elem(), b = rand_elem(), c = rand_elem();
      CHECK(mul(f, a, b) == mul(f, b, a));
      CHECK(add(f, a, b) == add(f, b, a));
      CHECK(mul(f, mul(f, a, b), c) == mul(f, a, mul(f, b, c)));
      CHECK(pow(f, a, BigInt(size)) == a);
    }
    if (size <= 1024) {
      for (int64_t i = 1; i < size; ++i) {
        FieldElement x = element_at(f, i);
        CHECK(mul(f, x, inv(f, x)) == one(f));
      }
      for (int64_t t = 0; t < size - 1; ++t)
        CHECK(discrete_log(f, pow(f, g, BigInt(t)), g) == t);
    }
  }
}
