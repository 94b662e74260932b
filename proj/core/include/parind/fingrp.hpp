#pragma once

#include "parind/errors.hpp"
#include "parind/gf.hpp"

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace parind::fingrp {

/// Which classical group the form equation ^t sigma(g) F g = F cuts out.
///   gu: F = J (antidiagonal identity blocks), sigma = x -> x^q on F_{q^2}
///   sp: F = J' = [[0, -1],[1, 0]] blocks, sigma = id, entries F_q
///   oj: F = J, sigma = id, entries F_q (the full J-orthogonal group)
///   gl: no form; GL_n over F_q (q may be a prime power)
enum class FormKind { gu, sp, oj, gl };

const char* to_string(FormKind k);
std::optional<FormKind> form_kind_from_string(const std::string& s);

struct FormSpec {
  FormKind kind;
  int n;      // Levi block size; matrix dimension is 2n (n for gl)
  int64_t q;  // residue field size (entry field is F_{q^2} for gu)

  int dim() const { return kind == FormKind::gl ? n : 2 * n; }
  bool operator==(const FormSpec& o) const { return kind == o.kind && n == o.n && q == o.q; }
};

/// Entry field with all arithmetic precomputed as lookup tables; element
/// handles are indices in the canonical gf enumeration. Sized for desk use
/// (field order <= 256).
struct EntryField {
  gf::FieldDescriptor desc;
  int size = 0;
  std::vector<uint8_t> mul_table, add_table;
  std::vector<uint8_t> neg_table, inv_table, bar_table;  // bar: x -> x^q (gu) or id

  uint8_t mul(uint8_t a, uint8_t b) const { return mul_table[a * size + b]; }
  uint8_t add(uint8_t a, uint8_t b) const { return add_table[a * size + b]; }
  uint8_t neg(uint8_t a) const { return neg_table[a]; }
  uint8_t inv(uint8_t a) const { return inv_table[a]; }
  uint8_t bar(uint8_t a) const { return bar_table[a]; }
};

inline constexpr int kMaxDim = 6;

/// Square matrix over an EntryField, entries as field indices.
struct Mat {
  uint8_t dim = 0;
  std::array<uint8_t, kMaxDim * kMaxDim> e{};

  uint8_t at(int r, int c) const { return e[r * dim + c]; }
  uint8_t& at(int r, int c) { return e[r * dim + c]; }
  bool operator==(const Mat& o) const { return dim == o.dim && e == o.e; }
};

struct MatHash {
  size_t operator()(const Mat& m) const {
    size_t h = 1469598103934665603ull ^ m.dim;
    for (int i = 0; i < m.dim * m.dim; ++i) {
      h ^= m.e[i];
      h *= 1099511628211ull;
    }
    return h;
  }
};

Mat mat_identity(const EntryField& F, int dim);
Mat mat_mul(const EntryField& F, const Mat& a, const Mat& b);
Mat mat_inverse(const EntryField& F, const Mat& a);  // Gauss-Jordan
Mat mat_transpose(const Mat& a);
Mat mat_bar(const EntryField& F, const Mat& a);
uint8_t mat_det(const EntryField& F, Mat a);

struct BuildOptions {
  uint64_t order_cap = 100000;
  uint64_t brute_force_candidate_cap = 10'000'000;
  bool cross_check = true;  // order formula + brute force at the smallest sizes
};

struct FiniteGroup {
  FormSpec form;
  std::shared_ptr<const EntryField> field;
  std::vector<Mat> elems;  // index 0 = identity; BFS discovery order
  std::unordered_map<Mat, uint32_t, MatHash> index;
  std::vector<Mat> generators;

  uint64_t order() const { return elems.size(); }
  uint32_t index_of(const Mat& m) const;  // NotInGroup
  std::optional<uint32_t> find(const Mat& m) const;
  uint32_t mul(uint32_t a, uint32_t b) const;
  /// Inverse index table; built on first use. build_group calls it before
  /// returning, so built groups are immutable and freely shareable.
  const std::vector<uint32_t>& inverses() const;

 private:
  mutable std::vector<uint32_t> inv_;
};

/// The defining form matrix (J or J') as an element of the entry field.
Mat form_matrix(const FormSpec& spec, const EntryField& F);

/// Does g satisfy ^t bar(g) F g = F?
bool satisfies_form(const FormSpec& spec, const EntryField& F, const Mat& g);

/// Generator set: Levi embeddings of GL_n generators, one unipotent element
/// per point of the root space, the Weyl element of the form, and (oj only)
/// a determinant -1 reflection.
std::vector<Mat> group_generators(const FormSpec& spec, const EntryField& F);

std::shared_ptr<const EntryField> build_entry_field(const FormSpec& spec);

/// BFS closure from the generators; checks the classical order formula and,
/// when the candidate space is small, an independent brute-force filter.
FiniteGroup build_group(const FormSpec& spec, const BuildOptions& opts = {});

/// Enumerate all dim x dim matrices and keep the form solutions.
FiniteGroup brute_force_group(const FormSpec& spec, const BuildOptions& opts = {});

/// Classical order of the group cut out by the form equation.
uint64_t order_formula(const FormSpec& spec);

/// Multiset of determinant values (field element index -> count).
std::vector<std::pair<uint8_t, uint64_t>> determinant_distribution(const FiniteGroup& G);

/// Siegel parabolic: zero lower-left n x n block. Levi = block diagonal,
/// U = unipotent upper block. Carries the double-coset sweep of P\G/P and a
/// fixed factorization g = p * rep * p' for every element.
struct ParabolicData {
  const FiniteGroup* G = nullptr;
  std::vector<uint32_t> P, L, U;       // ascending element indices
  std::vector<int32_t> p_ordinal;      // |G|-sized; position in P or -1
  std::vector<uint32_t> coset_rep;     // double coset id -> representative index
  std::vector<uint32_t> coset_id;      // |G|-sized
  std::vector<std::vector<uint32_t>> coset_elems;
  std::vector<uint32_t> fact_left, fact_right;  // g = left * rep * right

  size_t num_double_cosets() const { return coset_rep.size(); }
};

ParabolicData siegel_parabolic(const FiniteGroup& G);

/// Canonical (minimal-index) representative of P g P.
uint32_t double_coset_of(const ParabolicData& pd, uint32_t g);

/// Index [P : P cap w P w^{-1}] for the coset of w.
uint64_t parahoric_index(const ParabolicData& pd, uint32_t coset);

/// Top-left n x n block of a parabolic element, as a dim-n matrix.
Mat levi_block(const ParabolicData& pd, uint32_t p);

/// The GL_n group matching the Levi of this parabolic.
FormSpec levi_gl_spec(const FormSpec& spec);

/// Conjugacy classes of the subgroup given by `members` (closed under the
/// group operation), as lists of element indices.
std::vector<std::vector<uint32_t>> conjugacy_classes(const FiniteGroup& G,
                                                     const std::vector<uint32_t>& members);

/// Versioned little-endian element cache ("PINDG1", see docs/cache.md).
void save_group_cache(const FiniteGroup& G, const std::string& path);
std::optional<FiniteGroup> load_group_cache(const FormSpec& spec, const std::string& path);
std::string cache_file_name(const FormSpec& spec);

}  // namespace parind::fingrp
