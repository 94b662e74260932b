#include "parind/selftest.hpp"

#include "parind/dihecke.hpp"
#include "parind/finhecke.hpp"
#include "parind/finrep.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <functional>
#include <memory>
#include <numbers>
#include <random>
#include <sstream>

namespace parind::selftest {

namespace {

using chars::Case;
using classify::Nu;
using fingrp::FormKind;
using fingrp::FormSpec;

struct Check {
  bool ok = true;
  std::ostringstream msg;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      msg << (msg.str().empty() ? "" : "; ") << what;
    }
  }
  void note(const std::string& what) {
    msg << (msg.str().empty() ? "" : "; ") << what;
  }
};

int64_t ipow(int64_t b, int e) {
  int64_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

// Test-side oracle clauses for the reducibility criterion, independent of
// the chars module.
bool oracle_regular(int64_t q, int n, Case c, int64_t a, int64_t N) {
  int64_t s = 1;
  int d = c == Case::unramified ? 2 : 1;
  for (int i = 0; i < d; ++i) s = mulmod64(s, q % N, N);
  int64_t x = a;
  for (int j = 1; j < n; ++j) {
    x = mulmod64(x, s, N);
    if (x == a) return false;
  }
  return true;
}

bool oracle_condition(int64_t q, int n, Case c, int64_t a, int64_t N) {
  if (c == Case::unramified) {
    BigInt m = (boost::multiprecision::pow(BigInt(q), n + 1) + q) * a;
    return m % N == 0;
  }
  if (n % 2 != 0) return false;
  BigInt m = (boost::multiprecision::pow(BigInt(q), n / 2) + 1) * a;
  return m % N == 0;
}

fingrp::FiniteGroup build_with_cache(const FormSpec& spec, const std::string& cache_dir) {
  if (!cache_dir.empty()) {
    std::filesystem::create_directories(cache_dir);
    std::string path = cache_dir + "/" + fingrp::cache_file_name(spec);
    if (auto cached = fingrp::load_group_cache(spec, path)) return std::move(*cached);
    fingrp::FiniteGroup G = fingrp::build_group(spec);
    fingrp::save_group_cache(G, path);
    return G;
  }
  return fingrp::build_group(spec);
}

// ---- criterion 1: reducibility truth table ---------------------------------

Check criterion_truth_table(const AcceptanceOptions& opts) {
  Check ck;
  int64_t q = 3;
  long checked = 0;
  for (int n : {1, 2, 3}) {
    for (Case c : {Case::unramified, Case::ramified}) {
      int64_t N = ipow(q, (c == Case::unramified ? 2 : 1) * n) - 1;
      // nu candidates: q^n, q^{n/2}, -1, q^{-n}, q^{-n/2}, 1, 2 (exact).
      std::vector<QScalar> nus;
      QScalar qn{rational_pow(Rational(q), n)};
      nus.push_back(qn);
      nus.push_back(n % 2 == 0 ? QScalar(rational_pow(Rational(q), n / 2))
                               : QScalar(0, rational_pow(Rational(q), (n - 1) / 2), q));
      nus.push_back(QScalar(-1));
      nus.push_back(qn.inverse());
      nus.push_back(nus[1].inverse());
      nus.push_back(QScalar(1));
      nus.push_back(QScalar(2));

      // Reducibility twist set: {q^n, -1, q^{-n}} unramified, {q^{n/2}, -1,
      // q^{-n/2}} ramified (only meaningful at matching parity).
      QScalar lam = (c == Case::unramified) ? qn
                    : (n % 2 == 0)
                        ? QScalar(rational_pow(Rational(q), n / 2))
                        : QScalar(0, rational_pow(Rational(q), (n - 1) / 2), q);
      std::vector<QScalar> gamma_set{lam, QScalar(-1), lam.inverse()};
      bool parity = (c == Case::unramified) ? (n % 2 == 1) : (n % 2 == 0);
      for (int64_t a = 0; a < N; ++a) {
        bool reg = oracle_regular(q, n, c, a, N);
        bool cond = oracle_condition(q, n, c, a, N);
        for (const auto& nu : nus) {
          bool member = false;
          for (const auto& g : gamma_set) member = member || (g == nu);
          bool expected = parity && reg && cond && member;
          auto rep = classify::classify(q, n, c, a, Nu{nu});
          if (rep.reducible != expected) {
            ck.require(false, "verdict mismatch at n=" + std::to_string(n) + " case=" +
                                  chars::to_string(c) + " a=" + std::to_string(a) +
                                  " nu=" + nu.to_string());
            return ck;
          }
          if (opts.backend == report::Backend::floating) {
            auto repf = classify::classify(q, n, c, a, Nu{nu.to_complex()});
            if (repf.reducible != expected) {
              ck.require(false, "float-backend divergence at a=" + std::to_string(a));
              return ck;
            }
          }
          ++checked;
        }
      }
    }
  }
  ck.note(std::to_string(checked) + " classifications checked");
  return ck;
}

// ---- criterion 2: parity laws ----------------------------------------------

Check criterion_parity_laws(const AcceptanceOptions&) {
  Check ck;
  long scanned = 0;
  for (int64_t q : {3, 5}) {
    for (int n = 1; n <= 4; ++n) {
      for (Case c : {Case::unramified, Case::ramified}) {
        int64_t N = ipow(q, (c == Case::unramified ? 2 : 1) * n) - 1;
        bool parity = (c == Case::unramified) ? (n % 2 == 1) : (n % 2 == 0);
        for (int64_t a = 0; a < N; ++a) {
          auto theta = chars::make_char(q, n, c, a);
          bool reg = chars::is_regular(theta);
          bool witness = chars::condition_witness(theta).has_value();
          bool cond = chars::condition_theta(theta);
          // Parity-law condition: congruence plus twist witness.
          if (reg && cond && witness && !parity) {
            ck.require(false, "regular theta passes the condition at the wrong parity: q=" +
                                  std::to_string(q) + " n=" + std::to_string(n));
            return ck;
          }
          // At matching parity the witness form and the congruence must
          // coincide for regular theta.
          if (reg && parity && witness != cond) {
            ck.require(false, "witness/congruence divergence at matching parity: q=" +
                                  std::to_string(q) + " n=" + std::to_string(n) +
                                  " a=" + std::to_string(a));
            return ck;
          }
          ++scanned;
        }
        ck.require(chars::enumerate_characters(q, n, c, chars::Filter::regular_and_condition)
                           .empty() == !parity,
                   "filtered list nonempty iff parity matches");
        if (parity) {
          int64_t divisor = (c == Case::unramified) ? ipow(q, n) + 1 : ipow(q, n / 2) + 1;
          auto witness_theta = chars::make_char(q, n, c, N / divisor);
          ck.require(witness_theta.order() == divisor, "constructive witness order");
          ck.require(chars::is_regular(witness_theta), "constructive witness regularity");
          ck.require(chars::condition_theta(witness_theta), "constructive witness condition");
          auto j = chars::condition_witness(witness_theta);
          int expected = (c == Case::unramified) ? ((n + 1) / 2) % n : n / 2;
          ck.require(j.has_value() && *j == expected,
                     "witness exponent at q=" + std::to_string(q) + " n=" + std::to_string(n));
        }
      }
    }
  }
  ck.note(std::to_string(scanned) + " exponents scanned");
  return ck;
}

// ---- criteria 3-5: finite Hecke algebras -----------------------------------

// Heap-held so the internal cross-references (pd.G, prep.pd, rep.G) stay
// valid for the pipeline's lifetime.
struct HeckePipeline {
  fingrp::FiniteGroup G;
  fingrp::FiniteGroup gl;
  fingrp::ParabolicData pd;
  finrep::MatrixRep rep;
  finrep::ParabolicRep prep;
  uint32_t weyl_coset = 0;
};

std::unique_ptr<HeckePipeline> make_pipeline(const FormSpec& spec, int64_t theta_a,
                                             const std::string& cache_dir) {
  auto p = std::make_unique<HeckePipeline>();
  p->G = build_with_cache(spec, cache_dir);
  p->gl = fingrp::build_group(fingrp::levi_gl_spec(spec));
  p->pd = fingrp::siegel_parabolic(p->G);
  if (spec.kind == FormKind::gu) {
    auto theta = chars::make_char(spec.q, 1, Case::unramified, theta_a);
    p->rep = finrep::character_rep_gl1(p->gl, theta);
  } else {
    auto theta = chars::make_char(spec.q, 2, Case::ramified, theta_a);
    p->rep = finrep::realize_cuspidal_gl2(p->gl, theta);
  }
  p->prep = finrep::inflate_to_parabolic(p->rep, p->pd);
  uint32_t w = p->G.index_of(fingrp::form_matrix(spec, *p->G.field));
  p->weyl_coset = p->pd.coset_id[w];
  return p;
}

Check criterion_hecke_unramified(const AcceptanceOptions& opts) {
  Check ck;
  FormSpec spec{FormKind::gu, 1, 3};
  fingrp::FiniteGroup brute = fingrp::brute_force_group(spec);
  ck.require(brute.order() == 96, "brute-force |GU_2(F_9)| == 96");
  auto p = make_pipeline(spec, 2, opts.cache_dir);
  ck.require(p->G.order() == 96, "closure |GU_2(F_9)| == 96");
  int dim = finhecke::hecke_dimension(p->prep);
  ck.require(dim == 2, "hecke dimension 2, got " + std::to_string(dim));
  auto rel = finhecke::quadratic_relation(p->prep, p->weyl_coset, 3.0);
  ck.require(std::abs(rel.a - 2) < 1e-9 && std::abs(rel.b - 3) < 1e-9,
             "raw coefficients (2, 3)");
  ck.require(std::abs(rel.lambda - 3) < 1e-9, "lambda == q^n == 3");
  // Normalized relation phi^2 = (lambda-1) phi + lambda = 2 phi + 3.
  ck.require(std::abs(rel.t * rel.a - (rel.lambda - 1)) < 1e-9, "normalized relation");
  ck.note("lambda=3, relation phi^2 = 2 phi + 3");
  return ck;
}

Check criterion_hecke_ramified(const AcceptanceOptions& opts) {
  Check ck;
  FormSpec sp{FormKind::sp, 2, 3};
  auto p = make_pipeline(sp, 2, opts.cache_dir);
  ck.require(p->G.order() == 51840, "|Sp_4(F_3)| == 51840");
  ck.require(p->rep.dim == 2, "cuspidal dimension 2");
  int dim = finhecke::hecke_dimension(p->prep);
  ck.require(dim == 2, "Sp side hecke dimension 2, got " + std::to_string(dim));
  // Independent Mackey route through the character pairing.
  std::vector<finrep::Complex> chi(p->G.order(), 0.0);
  for (size_t i = 0; i < p->pd.P.size(); ++i) chi[p->pd.P[i]] = p->prep.rho[i].trace();
  auto pairing = finrep::induced_self_pairing(p->G, p->pd.P, chi);
  ck.require(std::abs(pairing - finrep::Complex(dim)) < 1e-6,
             "character pairing agrees with the intertwiner count");
  ck.require(fingrp::parahoric_index(p->pd, p->weyl_coset) == 27, "[P : P cap wPw^-1] == 27");
  auto rel = finhecke::quadratic_relation(p->prep, p->weyl_coset, 3.0);
  ck.require(std::abs(rel.a - 6) < 1e-6 && std::abs(rel.b - 27) < 1e-6,
             "raw coefficients (6, 27)");
  ck.require(std::abs(rel.lambda - 3) < 1e-6, "Sp lambda == q^{n/2} == 3");

  FormSpec oj{FormKind::oj, 2, 3};
  auto po = make_pipeline(oj, 2, opts.cache_dir);
  ck.require(po->G.order() == 1152, "|O_4^+(F_3)| == 1152");
  auto rel_oj = finhecke::quadratic_relation(po->prep, po->weyl_coset, 3.0);
  ck.require(std::abs(rel_oj.lambda - 3) < 1e-6, "J-orthogonal lambda == 3");
  ck.note("sp raw (a,b)=(6,27), oj raw (a,b)=(" + std::to_string(rel_oj.a) + "," +
          std::to_string(rel_oj.b) + ")");
  return ck;
}

Check criterion_negative_control(const AcceptanceOptions& opts) {
  Check ck;
  FormSpec spec{FormKind::gu, 1, 3};
  auto p = make_pipeline(spec, 1, opts.cache_dir);
  int dim = finhecke::hecke_dimension(p->prep);
  ck.require(dim == 1, "hecke dimension 1 for the failing exponent");
  for (const auto& nu :
       {QScalar(3), QScalar(-1), QScalar(Rational(1, 3)), QScalar(1), QScalar(2), QScalar(9)}) {
    auto rep = classify::classify(3, 1, Case::unramified, 1, Nu{nu});
    ck.require(!rep.reducible, "classify irreducible for every nu at theta=1");
  }
  return ck;
}

// ---- criterion 6: Gamma oracle ----------------------------------------------

Check criterion_gamma_oracle(const AcceptanceOptions&) {
  Check ck;
  for (int64_t q : {3, 5, 7}) {
    for (int n = 1; n <= 4; ++n) {
      for (Case c : {Case::unramified, Case::ramified}) {
        if (!classify::parity_matches(n, c)) continue;
        auto hp = classify::hecke_params(q, n, c);
        auto closed = classify::gamma_set(q, n, c);
        auto oracle = dihecke::gamma_set_oracle(hp->gamma, q);
        bool equal = closed.size() == oracle.size();
        for (const auto& x : closed) {
          bool found = false;
          for (const auto& y : oracle) found = found || (x == y);
          equal = equal && found;
        }
        ck.require(equal, "oracle set mismatch at q=" + std::to_string(q) +
                              " n=" + std::to_string(n) + " " + chars::to_string(c));
      }
    }
  }
  // Float scan: no non-simple points beyond the exact locus.
  long flagged = 0;
  for (int64_t q : {3, 5, 7}) {
    for (auto [n, c] : {std::pair{1, Case::unramified}, std::pair{2, Case::ramified}}) {
      auto hp = classify::hecke_params(q, n, c);
      auto closed = classify::gamma_set(q, n, c);
      std::complex<double> gamma = hp->gamma.to_complex();
      auto scan_point = [&](std::complex<double> nu) {
        auto mod = dihecke::induced_module<std::complex<double>>(nu, gamma);
        bool simple = dihecke::is_simple(mod, 0, 1e-6);
        double dist = 1e300;
        for (const auto& g : closed) dist = std::min(dist, std::abs(nu - g.to_complex()));
        bool expected_nonsimple = dist < 1e-6;
        if (simple == expected_nonsimple) {
          ck.require(false, "scan mismatch at nu=" + std::to_string(nu.real()) + "+" +
                                std::to_string(nu.imag()) + "i, q=" + std::to_string(q));
          return false;
        }
        if (!simple) ++flagged;
        return true;
      };
      for (int k = 0; k < 2000; ++k) {
        double x = -10.0 + 20.0 * k / 1999.0;
        if (std::abs(x) < 1e-12) continue;
        if (!scan_point({x, 0})) return ck;
      }
      for (int k = 0; k < 2000; ++k) {
        double t = 2 * std::numbers::pi * k / 2000.0;
        if (!scan_point({std::cos(t), std::sin(t)})) return ck;
      }
    }
  }
  ck.note("scan flagged " + std::to_string(flagged) + " on-locus points, none extra");
  return ck;
}

// ---- criterion 7: delta_P ----------------------------------------------------

Check criterion_delta_p(const AcceptanceOptions&) {
  Check ck;
  for (int64_t q : {3, 5}) {
    for (int n = 0; n <= 4; ++n) {
      Rational unram = classify::delta_p_zeta(q, n, Case::unramified);
      Rational ram = classify::delta_p_zeta(q, n, Case::ramified);
      BigInt qn2 = boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(n * n));
      ck.require(unram == Rational(BigInt(1), qn2 * qn2), "delta unramified exact value");
      ck.require(ram == Rational(BigInt(1), qn2), "delta ramified exact value");
      ck.require(unram == ram * ram, "delta square identity");
    }
  }
  ck.require(classify::delta_p_zeta(3, 0, Case::unramified) == Rational(1),
             "empty unipotent radical");
  return ck;
}

// ---- criterion 8: representation substrate -----------------------------------

Check criterion_cuspidal_substrate(const AcceptanceOptions&) {
  Check ck;
  fingrp::FiniteGroup gl2 = fingrp::build_group(FormSpec{FormKind::gl, 2, 3});
  auto orbits = chars::galois_orbits(3, 2, Case::ramified, /*only_regular=*/true);
  ck.require(orbits.size() == 3, "exactly 3 cuspidal classes");

  std::vector<finrep::ClassFunction> cuspidals;
  for (const auto& orbit : orbits) {
    auto theta = chars::make_char(3, 2, Case::ramified, orbit[0]);
    cuspidals.push_back(finrep::cuspidal_character_gl2(gl2, theta));
    ck.require(std::abs(cuspidals.back().v[0] - finrep::Complex(2)) < 1e-9,
               "cuspidal dimension 2");
  }
  for (size_t i = 0; i < cuspidals.size(); ++i) {
    for (size_t j = 0; j < cuspidals.size(); ++j) {
      auto ip = finrep::inner_product(cuspidals[i], cuspidals[j]);
      ck.require(std::abs(ip - finrep::Complex(i == j ? 1 : 0)) < 1e-6,
                 "cuspidal orthonormality");
    }
  }
  auto gg = finrep::gelfand_graev_character(gl2);
  for (const auto& chi : cuspidals) {
    auto mult = finrep::inner_product(gg, chi);
    ck.require(std::abs(mult - finrep::Complex(1)) < 1e-6, "Gelfand-Graev multiplicity 1");
  }
  for (const auto& orbit : orbits) {
    auto theta = chars::make_char(3, 2, Case::ramified, orbit[0]);
    auto chi = finrep::cuspidal_character_gl2(gl2, theta);
    auto rep = finrep::realize_cuspidal_gl2(gl2, theta);
    for (uint32_t g = 0; g < gl2.order(); ++g)
      if (std::abs(rep.mats[g].trace() - chi.v[g]) > 1e-9) {
        ck.require(false, "matrix model trace mismatch");
        break;
      }
  }
  auto c = finrep::green_constant(gl2);
  ck.note("green constant c = " + std::to_string(c.real()) +
          (std::abs(c.imag()) > 1e-12 ? "+imag" : ""));
  return ck;
}

// ---- criterion 9: abstract algebra invariants ---------------------------------

Check criterion_dihecke_invariants(const AcceptanceOptions& opts) {
  Check ck;
  using dihecke::HeckeElement;
  using dihecke::hecke_multiply;

  QScalar gamma = QScalar::sqrt_q(3);
  auto g0 = dihecke::hecke_generator(gamma, 0);
  auto g1 = dihecke::hecke_generator(gamma, 1);

  // Braid-free associativity on generators, exact.
  auto left = hecke_multiply(hecke_multiply(g0, g1), g0);
  auto right = hecke_multiply(g0, hecke_multiply(g1, g0));
  ck.require(left.coeffs == right.coeffs, "(g0 g1) g0 == g0 (g1 g0)");

  // 100 random triples.
  std::mt19937_64 rng(opts.seed);
  auto random_elem = [&]() {
    HeckeElement<QScalar> h = dihecke::hecke_zero(gamma);
    int terms = 1 + static_cast<int>(rng() % 3);
    for (int t = 0; t < terms; ++t) {
      dihecke::DihedralWord w{static_cast<uint32_t>(rng() % 5),
                              static_cast<uint8_t>(rng() % 2)};
      h.add_term(w, QScalar(Rational(static_cast<long>(rng() % 7) - 3,
                                     1 + static_cast<long>(rng() % 3))));
    }
    return h;
  };
  for (int i = 0; i < 100; ++i) {
    auto a = random_elem(), b = random_elem(), c = random_elem();
    auto lhs = hecke_multiply(hecke_multiply(a, b), c);
    auto rhs = hecke_multiply(a, hecke_multiply(b, c));
    if (!(lhs.coeffs == rhs.coeffs)) {
      ck.require(false, "random associativity failure at trial " + std::to_string(i));
      break;
    }
  }

  // Freeness round-trip: every word of length <= 6, plus random elements.
  for (uint32_t len = 0; len <= 6; ++len) {
    for (uint8_t first : {0, 1}) {
      if (len == 0 && first == 1) continue;
      HeckeElement<QScalar> h = dihecke::hecke_zero(gamma);
      h.add_term(dihecke::DihedralWord{len, first}, QScalar(1));
      auto dec = dihecke::laurent_decompose(h);
      auto back = dihecke::laurent_recompose(gamma, dec);
      if (!(back.coeffs == h.coeffs)) {
        ck.require(false, "freeness round-trip failed on a basis word");
        break;
      }
    }
  }
  for (int i = 0; i < 50; ++i) {
    auto h = random_elem();
    auto back = dihecke::laurent_recompose(gamma, dihecke::laurent_decompose(h));
    if (!(back.coeffs == h.coeffs)) {
      ck.require(false, "freeness round-trip failed on a random element");
      break;
    }
  }

  // Laurent law X^j X^k = X^{j+k}, exact, with unit leading coefficient.
  for (long j = -5; j <= 5; ++j) {
    for (long k = -5; k <= 5; ++k) {
      auto prod = hecke_multiply(dihecke::laurent_embed(gamma, j),
                                 dihecke::laurent_embed(gamma, k));
      auto expect = dihecke::laurent_embed(gamma, j + k);
      if (!(prod.coeffs == expect.coeffs)) {
        ck.require(false, "X^j X^k != X^{j+k} at j=" + std::to_string(j) +
                              " k=" + std::to_string(k));
        break;
      }
      auto lead = std::prev(expect.coeffs.end());
      if (j + k >= 0 && !(lead->second == QScalar(1))) {
        ck.require(false, "leading coefficient not 1");
        break;
      }
    }
    if (!ck.ok) break;
  }

  // Relation preservation on induced modules, exact.
  for (const auto& nu : {QScalar(2), QScalar(3), QScalar(Rational(1, 3)), QScalar(-1),
                         QScalar(7)}) {
    auto mod = dihecke::induced_module<QScalar>(nu, gamma);
    QScalar delta = gamma - gamma.inverse();
    auto check_rel = [&](const QScalar m[2][2], const char* name) {
      // m^2 == delta m + I
      QScalar sq[2][2];
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          sq[i][j] = m[i][0] * m[0][j] + m[i][1] * m[1][j];
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
          QScalar want = delta * m[i][j] + (i == j ? QScalar(1) : QScalar(0));
          if (!(sq[i][j] == want)) ck.require(false, std::string(name) + " relation broken");
        }
    };
    check_rel(mod.m0, "M0");
    check_rel(mod.m1, "M1");
  }

  if (opts.backend == report::Backend::floating) {
    std::complex<double> gf = std::sqrt(3.0);
    auto modf = dihecke::induced_module<std::complex<double>>({2.0, 0.0}, gf);
    std::complex<double> delta = gf - 1.0 / gf;
    for (auto m : {modf.m0, modf.m1}) {
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
          std::complex<double> sq = m[i][0] * m[0][j] + m[i][1] * m[1][j];
          std::complex<double> want = delta * m[i][j] + (i == j ? 1.0 : 0.0);
          ck.require(std::abs(sq - want) < 1e-9, "float relation drift");
        }
    }
  }
  return ck;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts) {
  struct Entry {
    const char* id;
    double budget_ms;
    std::function<Check(const AcceptanceOptions&)> fn;
  };
  const std::vector<Entry> entries{
      {"c1-classify-truth-table", 1000, criterion_truth_table},
      {"c2-chars-parity-laws", 10000, criterion_parity_laws},
      {"c3-finhecke-gu-unramified", 1000, criterion_hecke_unramified},
      {"c4-finhecke-sp-oj-ramified", 300000, criterion_hecke_ramified},
      {"c5-finhecke-negative-control", 60000, criterion_negative_control},
      {"c6-dihecke-gamma-oracle", 10000, criterion_gamma_oracle},
      {"c7-classify-delta-p", 1000, criterion_delta_p},
      {"c8-finrep-cuspidal-substrate", 5000, criterion_cuspidal_substrate},
      {"c9-dihecke-invariants", 1000, criterion_dihecke_invariants},
  };
  std::vector<CriterionResult> results;
  for (const auto& e : entries) {
    if (!opts.only.empty() && std::string(e.id).find(opts.only) == std::string::npos) continue;
    CriterionResult res;
    res.id = e.id;
    res.budget_millis = e.budget_ms;
    auto t0 = std::chrono::steady_clock::now();
    try {
      Check ck = e.fn(opts);
      res.pass = ck.ok;
      res.detail = ck.msg.str();
    } catch (const std::exception& ex) {
      res.pass = false;
      res.detail = std::string("exception: ") + ex.what();
    }
    auto t1 = std::chrono::steady_clock::now();
    res.millis = std::chrono::duration<double, std::milli>(t1 - t0).count();
    if (res.millis > res.budget_millis) {
      res.pass = false;
      res.detail += (res.detail.empty() ? "" : "; ") + std::string("runtime budget exceeded");
    }
    results.push_back(std::move(res));
  }
  return results;
}

}  // namespace parind::selftest
