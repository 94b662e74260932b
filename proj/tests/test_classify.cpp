#include "parind/classify.hpp"
#include "parind/dihecke.hpp"

#include <doctest.h>

using namespace parind;
using classify::Nu;

using classify::delta_p_zeta;
using classify::gamma_set;
using classify::hecke_params;
using classify::parity_matches;
using chars::Case;

TEST_CASE("delta_P values") {
  CHECK(delta_p_zeta(3, 1, Case::unramified) == Rational(1, 9));
  CHECK(delta_p_zeta(3, 2, Case::ramified) == Rational(1, 81));
  CHECK(delta_p_zeta(3, 0, Case::unramified) == Rational(1));
  CHECK(delta_p_zeta(7, 0, Case::ramified) == Rational(1));
  // regression guard: the closed forms satisfy delta_unram = delta_ram^2
  for (int64_t q : {3, 5, 7}) {
    for (int n = 0; n <= 4; ++n) {
      Rational r = delta_p_zeta(q, n, Case::ramified);
      CHECK(delta_p_zeta(q, n, Case::unramified) == r * r);
    }
  }
}

TEST_CASE("gamma_set") {
  auto u = gamma_set(3, 1, Case::unramified);
  REQUIRE(u.size() == 3);
  CHECK(u[0] == QScalar(3));
  CHECK(u[1] == QScalar(-1));
  CHECK(u[2] == QScalar(Rational(1, 3)));
  auto r = gamma_set(3, 2, Case::ramified);
  REQUIRE(r.size() == 3);
  CHECK(r[0] == QScalar(3));
  CHECK(r[2] == QScalar(Rational(1, 3)));
  CHECK(gamma_set(3, 2, Case::unramified).empty());  // parity clause
  CHECK(gamma_set(3, 1, Case::ramified).empty());
}

TEST_CASE("hecke parameters") {
  auto hp = hecke_params(3, 1, Case::unramified);
  REQUIRE(hp.has_value());
  CHECK(hp->lambda == Rational(3));
  CHECK(hp->gamma == QScalar(0, 1, 3));
  CHECK(hp->gamma * hp->gamma == QScalar(hp->lambda));
  auto hp4 = hecke_params(3, 4, Case::ramified);
  REQUIRE(hp4.has_value());
  CHECK(hp4->lambda == Rational(9));
  CHECK(hp4->gamma == QScalar(3));  // q^{n/4} rational when n/2 is even
  CHECK_FALSE(hecke_params(3, 2, Case::unramified).has_value());
}

TEST_CASE("classify verdicts") {
  auto r1 = classify::classify(3, 1, Case::unramified, 2, Nu{QScalar(3)});
  CHECK(r1.reducible);
  CHECK(r1.regular);
  CHECK(r1.condition);
  CHECK(r1.parity_ok);
  CHECK(r1.witness_agrees);

  auto r2 = classify::classify(3, 1, Case::unramified, 2, Nu{QScalar(2)});
  CHECK_FALSE(r2.reducible);  // 2 is not in Gamma
  CHECK(r2.condition);

  auto r3 = classify::classify(3, 2, Case::unramified, 1, Nu{QScalar(-1)});
  CHECK_FALSE(r3.reducible);
  CHECK(r3.commutative_case);
  CHECK_FALSE(r3.hecke.has_value());

  auto r4 = classify::classify(3, 1, Case::unramified, 1, Nu{QScalar(3)});
  CHECK_FALSE(r4.reducible);  // condition fails: 12 != 0 mod 8
  CHECK_FALSE(r4.condition);

  // irregular theta is reported, not rejected
  auto r5 = classify::classify(3, 2, Case::ramified, 4, Nu{QScalar(3)});
  CHECK_FALSE(r5.regular);
  CHECK_FALSE(r5.reducible);

  CHECK_THROWS_AS(classify::classify(3, 1, Case::unramified, 2, Nu{QScalar(0)}),
                  ZeroCharacterValueError);
}

TEST_CASE("float fallback membership") {
  auto r = classify::classify(3, 1, Case::unramified, 2, Nu{std::complex<double>(3.0, 0.0)});
  CHECK(r.nu_in_gamma_set);
  CHECK(r.reducible);
  auto r2 = classify::classify(3, 1, Case::unramified, 2, Nu{std::complex<double>(3.0 + 1e-6, 0.0)});
  CHECK_FALSE(r2.nu_in_gamma_set);  // outside the 1e-9 tolerance
  auto r3 = classify::classify(3, 1, Case::unramified, 2, Nu{std::complex<double>(1.0 / 3.0, 0.0)});
  CHECK(r3.nu_in_gamma_set);
}

TEST_CASE("commutative case formula") {
  for (int64_t q : {3, 5}) {
    for (int n = 1; n <= 4; ++n) {
      for (Case c : {Case::unramified, Case::ramified}) {
        auto r = classify::classify(q, n, c, 1, Nu{QScalar(1)});
        bool expected = (c == Case::unramified) ? (n % 2 == 0) : (n % 2 == 1);
        CHECK(r.commutative_case == expected);
        if (r.commutative_case) {
          CHECK(r.gamma_set.empty());
          CHECK_FALSE(r.reducible);
        }
      }
    }
  }
}

TEST_CASE("witness agreement flagged across a sweep") {
  for (int64_t q : {3, 5}) {
    for (int n = 1; n <= 3; ++n) {
      for (Case c : {Case::unramified, Case::ramified}) {
        int64_t N = chars::character_group_order(q, n, c);
        for (int64_t a = 0; a < N; ++a) {
          auto r = classify::classify(q, n, c, a, Nu{QScalar(1)});
          CHECK(r.witness_agrees);
        }
      }
    }
  }
}

TEST_CASE("gamma_set equals the module oracle's non-simple locus") {
  for (int64_t q : {3, 5, 7}) {
    for (int n = 1; n <= 4; ++n) {
      for (Case c : {Case::unramified, Case::ramified}) {
        if (!parity_matches(n, c)) continue;
        auto hp = hecke_params(q, n, c);
        auto closed = gamma_set(q, n, c);
        auto locus = dihecke::gamma_set_oracle(hp->gamma, q);
        REQUIRE(locus.size() == closed.size());
        for (const auto& x : closed) {
          bool found = false;
          for (const auto& y : locus) found = found || (x == y);
          CHECK(found);
        }
      }
    }
  }
}
