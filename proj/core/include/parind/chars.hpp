#pragma once

#include "parind/errors.hpp"
#include "parind/numeric.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace parind::chars {

enum class Case { unramified, ramified };

inline const char* to_string(Case c) { return c == Case::unramified ? "unramified" : "ramified"; }
std::optional<Case> case_from_string(const std::string& s);

/// Residue data attached to one (q, n, case) choice. In the unramified case
/// the residue extension doubles (k_E = F_{q^2}, l = F_{q^{2n}}); ramified
/// keeps k_E = F_q, l = F_{q^n}. The Galois twist on character exponents is
/// multiplication by s = q^d mod N where d is the residue-degree multiplier.
struct CaseTag {
  Case kind;
  int residue_degree_multiplier() const { return kind == Case::unramified ? 2 : 1; }
};

inline constexpr int64_t kMaxCharacterGroupOrder = 10'000'000;  // desk-scale cap on N

/// |l^x| = q^{dn} - 1. TooLarge above the desk-scale cap.
int64_t character_group_order(int64_t q, int n, Case c);

/// A character theta of l^x stored as an exponent a mod N relative to the
/// fixed primitive generator g: theta(g^t) = exp(2*pi*i*a*t/N).
struct CharExponent {
  int64_t a = 0;
  int64_t q = 0;
  int n = 0;
  Case kind = Case::unramified;

  int64_t N() const { return character_group_order(q, n, kind); }
  int64_t twist_base() const;  // s = q^d mod N
  int64_t order() const;       // N / gcd(N, a)
};

CharExponent make_char(int64_t q, int n, Case c, int64_t a);

/// theta^{Phi^j}: exponent a * s^j mod N.
CharExponent galois_twist(const CharExponent& c, int64_t j);

/// Trivial Galois stabilizer: the twist orbit has exactly n members.
bool is_regular(const CharExponent& c);

/// Unramified: theta^{q^{n+1}} = theta^{-q}; ramified (n even):
/// theta^{q^{n/2}} = theta^{-1}. Ramified with n odd returns false (the
/// reducibility clause is vacuous at that parity).
bool condition_theta(const CharExponent& c);

/// Least j in [0, n) with theta^{Phi^j} = theta^{-q} (unramified) resp.
/// theta^{-1} (ramified), or absent.
std::optional<int> condition_witness(const CharExponent& c);

enum class Filter { all, regular, regular_and_condition };
std::optional<Filter> filter_from_string(const std::string& s);

/// Ascending-a list of exponents passing the filter. TooLarge above cap.
std::vector<CharExponent> enumerate_characters(int64_t q, int n, Case c, Filter filter);

/// Partition of (regular) exponents into Galois-twist orbits. Each orbit is
/// sorted ascending; orbits are ordered by smallest member.
std::vector<std::vector<int64_t>> galois_orbits(int64_t q, int n, Case c, bool only_regular);

}  // namespace parind::chars
