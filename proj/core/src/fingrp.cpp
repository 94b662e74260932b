#include "parind/fingrp.hpp"

#include <algorithm>
#include <cstring>
#include <deque>
#include <fstream>

namespace parind::fingrp {

const char* to_string(FormKind k) {
  switch (k) {
    case FormKind::gu: return "gu";
    case FormKind::sp: return "sp";
    case FormKind::oj: return "oj";
    case FormKind::gl: return "gl";
  }
  return "?";
}

std::optional<FormKind> form_kind_from_string(const std::string& s) {
  if (s == "gu") return FormKind::gu;
  if (s == "sp") return FormKind::sp;
  if (s == "oj") return FormKind::oj;
  if (s == "gl") return FormKind::gl;
  return std::nullopt;
}

namespace {

// q = p^r for an odd prime p.
std::pair<int64_t, int> prime_power_split(int64_t q) {
  for (int64_t p = 3; p * p <= q; p += 2) {
    if (q % p == 0) {
      int r = 0;
      int64_t t = q;
      while (t % p == 0) {
        t /= p;
        ++r;
      }
      if (t != 1) throw NonPrimeError("q = " + std::to_string(q) + " is not a prime power");
      return {p, r};
    }
  }
  return {q, 1};  // q itself prime (or 1, rejected by gf::build_field)
}

}  // namespace

std::shared_ptr<const EntryField> build_entry_field(const FormSpec& spec) {
  auto [p, r] = prime_power_split(spec.q);
  int degree = (spec.kind == FormKind::gu) ? 2 * r : r;
  auto F = std::make_shared<EntryField>();
  F->desc = gf::build_field(p, degree);
  int64_t size = F->desc.order();
  if (size > 256) throw TooLargeError("entry field of order " + std::to_string(size) +
                                      " exceeds the table backend");
  F->size = static_cast<int>(size);
  F->mul_table.resize(size * size);
  F->add_table.resize(size * size);
  F->neg_table.resize(size);
  F->inv_table.resize(size, 0);
  F->bar_table.resize(size);
  std::vector<gf::FieldElement> elems;
  elems.reserve(size);
  for (int64_t i = 0; i < size; ++i) elems.push_back(gf::element_at(F->desc, i));
  for (int64_t i = 0; i < size; ++i) {
    for (int64_t j = 0; j < size; ++j) {
      F->mul_table[i * size + j] =
          static_cast<uint8_t>(gf::element_index(F->desc, gf::mul(F->desc, elems[i], elems[j])));
      F->add_table[i * size + j] =
          static_cast<uint8_t>(gf::element_index(F->desc, gf::add(F->desc, elems[i], elems[j])));
    }
    F->neg_table[i] =
        static_cast<uint8_t>(gf::element_index(F->desc, gf::neg(F->desc, elems[i])));
    if (i != 0)
      F->inv_table[i] =
          static_cast<uint8_t>(gf::element_index(F->desc, gf::inv(F->desc, elems[i])));
    // bar = x -> x^q, the k_E/k_F involution; identity unless gu.
    F->bar_table[i] = (spec.kind == FormKind::gu)
                          ? static_cast<uint8_t>(gf::element_index(
                                F->desc, gf::pow(F->desc, elems[i], BigInt(spec.q))))
                          : static_cast<uint8_t>(i);
  }
  return F;
}

Mat mat_identity(const EntryField& F, int dim) {
  Mat m;
  m.dim = static_cast<uint8_t>(dim);
  uint8_t one = static_cast<uint8_t>(gf::element_index(F.desc, gf::one(F.desc)));
  for (int i = 0; i < dim; ++i) m.at(i, i) = one;
  return m;
}

Mat mat_mul(const EntryField& F, const Mat& a, const Mat& b) {
  Mat r;
  r.dim = a.dim;
  for (int i = 0; i < a.dim; ++i) {
    for (int j = 0; j < a.dim; ++j) {
      uint8_t acc = 0;
      for (int k = 0; k < a.dim; ++k) acc = F.add(acc, F.mul(a.at(i, k), b.at(k, j)));
      r.at(i, j) = acc;
    }
  }
  return r;
}

Mat mat_transpose(const Mat& a) {
  Mat r;
  r.dim = a.dim;
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j) r.at(i, j) = a.at(j, i);
  return r;
}

Mat mat_bar(const EntryField& F, const Mat& a) {
  Mat r = a;
  for (int i = 0; i < a.dim * a.dim; ++i) r.e[i] = F.bar(r.e[i]);
  return r;
}

Mat mat_inverse(const EntryField& F, const Mat& a) {
  int n = a.dim;
  Mat left = a;
  Mat right = mat_identity(F, n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int row = col; row < n; ++row)
      if (left.at(row, col) != 0) {
        pivot = row;
        break;
      }
    if (pivot < 0) throw NotInGroupError("mat_inverse: singular matrix");
    if (pivot != col) {
      for (int j = 0; j < n; ++j) {
        std::swap(left.at(pivot, j), left.at(col, j));
        std::swap(right.at(pivot, j), right.at(col, j));
      }
    }
    uint8_t inv_p = F.inv(left.at(col, col));
    for (int j = 0; j < n; ++j) {
      left.at(col, j) = F.mul(left.at(col, j), inv_p);
      right.at(col, j) = F.mul(right.at(col, j), inv_p);
    }
    for (int row = 0; row < n; ++row) {
      if (row == col || left.at(row, col) == 0) continue;
      uint8_t f = left.at(row, col);
      for (int j = 0; j < n; ++j) {
        left.at(row, j) = F.add(left.at(row, j), F.neg(F.mul(f, left.at(col, j))));
        right.at(row, j) = F.add(right.at(row, j), F.neg(F.mul(f, right.at(col, j))));
      }
    }
  }
  return right;
}

uint8_t mat_det(const EntryField& F, Mat a) {
  int n = a.dim;
  uint8_t det = static_cast<uint8_t>(gf::element_index(F.desc, gf::one(F.desc)));
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int row = col; row < n; ++row)
      if (a.at(row, col) != 0) {
        pivot = row;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(a.at(pivot, j), a.at(col, j));
      det = F.neg(det);
    }
    det = F.mul(det, a.at(col, col));
    uint8_t inv_p = F.inv(a.at(col, col));
    for (int row = col + 1; row < n; ++row) {
      if (a.at(row, col) == 0) continue;
      uint8_t f = F.mul(a.at(row, col), inv_p);
      for (int j = 0; j < n; ++j)
        a.at(row, j) = F.add(a.at(row, j), F.neg(F.mul(f, a.at(col, j))));
    }
  }
  return det;
}

Mat form_matrix(const FormSpec& spec, const EntryField& F) {
  int n = spec.n;
  Mat J;
  J.dim = static_cast<uint8_t>(2 * n);
  uint8_t one = static_cast<uint8_t>(gf::element_index(F.desc, gf::one(F.desc)));
  for (int i = 0; i < n; ++i) {
    if (spec.kind == FormKind::sp) {
      J.at(i, n + i) = F.neg(one);
      J.at(n + i, i) = one;
    } else {
      J.at(i, n + i) = one;
      J.at(n + i, i) = one;
    }
  }
  return J;
}

bool satisfies_form(const FormSpec& spec, const EntryField& F, const Mat& g) {
  if (spec.kind == FormKind::gl) return true;
  Mat J = form_matrix(spec, F);
  Mat lhs = mat_mul(F, mat_transpose(mat_bar(F, g)), mat_mul(F, J, g));
  return lhs == J;
}

namespace {

std::vector<Mat> gl_generators(const EntryField& F, int n) {
  std::vector<Mat> gens;
  uint8_t one = static_cast<uint8_t>(gf::element_index(F.desc, gf::one(F.desc)));
  uint8_t gen = static_cast<uint8_t>(
      gf::element_index(F.desc, gf::primitive_generator(F.desc)));
  Mat torus = mat_identity(F, n);
  torus.at(0, 0) = gen;
  gens.push_back(torus);
  if (n >= 2) {
    Mat perm;
    perm.dim = static_cast<uint8_t>(n);
    perm.at(0, 1) = one;
    perm.at(1, 0) = one;
    for (int i = 2; i < n; ++i) perm.at(i, i) = one;
    gens.push_back(perm);
    Mat transvection = mat_identity(F, n);
    transvection.at(0, 1) = one;
    gens.push_back(transvection);
  }
  return gens;
}

// diag(a, ^t bar(a)^{-1})
Mat levi_embed(const EntryField& F, int n, const Mat& a) {
  Mat m;
  m.dim = static_cast<uint8_t>(2 * n);
  Mat dual = mat_transpose(mat_bar(F, mat_inverse(F, a)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      m.at(i, j) = a.at(i, j);
      m.at(n + i, n + j) = dual.at(i, j);
    }
  return m;
}

// All X with the root-space condition of the form: X + ^t bar(X) = 0 (gu/oj)
// or X symmetric (sp; the J' form equation reduces to ^t X = X).
std::vector<Mat> unipotent_blocks(const FormSpec& spec, const EntryField& F) {
  int n = spec.n;
  int cells = n * n;
  std::vector<Mat> out;
  int64_t total = 1;
  for (int i = 0; i < cells; ++i) {
    total *= F.size;
    if (total > 1'000'000) throw TooLargeError("unipotent block enumeration too large");
  }
  for (int64_t code = 1; code < total; ++code) {
    Mat X;
    X.dim = static_cast<uint8_t>(n);
    int64_t t = code;
    for (int i = 0; i < cells; ++i) {
      X.e[i] = static_cast<uint8_t>(t % F.size);
      t /= F.size;
    }
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j) {
        uint8_t lhs = X.at(i, j);
        uint8_t rhs = X.at(j, i);
        if (spec.kind == FormKind::sp)
          ok = (lhs == rhs);
        else
          ok = (F.add(lhs, F.bar(rhs)) == 0);
      }
    if (ok) out.push_back(X);
  }
  return out;
}

Mat upper_unipotent(const EntryField& F, int n, const Mat& X) {
  Mat m = mat_identity(F, 2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, n + j) = X.at(i, j);
  return m;
}

}  // namespace

std::vector<Mat> group_generators(const FormSpec& spec, const EntryField& F) {
  if (spec.kind == FormKind::gl) return gl_generators(F, spec.n);
  int n = spec.n;
  std::vector<Mat> gens;
  for (const Mat& a : gl_generators(F, n)) gens.push_back(levi_embed(F, n, a));
  for (const Mat& X : unipotent_blocks(spec, F)) gens.push_back(upper_unipotent(F, n, X));
  gens.push_back(form_matrix(spec, F));
  if (spec.kind == FormKind::oj) {
    // e_1 <-> f_1 reflection, determinant -1; J alone lands in SO for n even.
    Mat sigma = mat_identity(F, 2 * n);
    uint8_t one = static_cast<uint8_t>(gf::element_index(F.desc, gf::one(F.desc)));
    sigma.at(0, 0) = 0;
    sigma.at(n, n) = 0;
    sigma.at(0, n) = one;
    sigma.at(n, 0) = one;
    gens.push_back(sigma);
  }
  return gens;
}

uint64_t order_formula(const FormSpec& spec) {
  auto q = static_cast<uint64_t>(spec.q);
  auto qpow = [&](int e) {
    uint64_t r = 1;
    for (int i = 0; i < e; ++i) r *= q;
    return r;
  };
  int n = spec.n;
  uint64_t order = 1;
  switch (spec.kind) {
    case FormKind::gu: {
      // |U_m(q)| = q^{m(m-1)/2} prod_{i=1..m} (q^i - (-1)^i), m = 2n
      int m = 2 * n;
      order = qpow(m * (m - 1) / 2);
      for (int i = 1; i <= m; ++i)
        order *= (i % 2 == 0) ? (qpow(i) - 1) : (qpow(i) + 1);
      return order;
    }
    case FormKind::sp: {
      order = qpow(n * n);
      for (int i = 1; i <= n; ++i) order *= (qpow(2 * i) - 1);
      return order;
    }
    case FormKind::oj: {
      // full orthogonal group of the split form
      order = 2 * qpow(n * (n - 1)) * (qpow(n) - 1);
      for (int i = 1; i <= n - 1; ++i) order *= (qpow(2 * i) - 1);
      return order;
    }
    case FormKind::gl: {
      order = 1;
      for (int i = 0; i < n; ++i) order *= (qpow(n) - qpow(i));
      return order;
    }
  }
  return order;
}

uint32_t FiniteGroup::index_of(const Mat& m) const {
  auto it = index.find(m);
  if (it == index.end()) throw NotInGroupError("element is not in the group");
  return it->second;
}

std::optional<uint32_t> FiniteGroup::find(const Mat& m) const {
  auto it = index.find(m);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

uint32_t FiniteGroup::mul(uint32_t a, uint32_t b) const {
  return index_of(mat_mul(*field, elems[a], elems[b]));
}

const std::vector<uint32_t>& FiniteGroup::inverses() const {
  if (inv_.empty()) {
    inv_.resize(elems.size());
    for (size_t i = 0; i < elems.size(); ++i)
      inv_[i] = index_of(mat_inverse(*field, elems[i]));
  }
  return inv_;
}

namespace {

FiniteGroup closure_from_generators(const FormSpec& spec,
                                    std::shared_ptr<const EntryField> field,
                                    const std::vector<Mat>& gens, uint64_t cap) {
  FiniteGroup G;
  G.form = spec;
  G.field = std::move(field);
  G.generators = gens;
  for (const Mat& g : gens) {
    if (!satisfies_form(spec, *G.field, g))
      throw ClosureIncompleteError("generator violates the form equation");
  }
  Mat id = mat_identity(*G.field, spec.dim());
  G.elems.push_back(id);
  G.index.emplace(id, 0);
  std::deque<uint32_t> queue{0};
  while (!queue.empty()) {
    uint32_t cur = queue.front();
    queue.pop_front();
    for (const Mat& g : gens) {
      Mat next = mat_mul(*G.field, G.elems[cur], g);
      if (G.index.emplace(next, static_cast<uint32_t>(G.elems.size())).second) {
        G.elems.push_back(next);
        queue.push_back(static_cast<uint32_t>(G.elems.size() - 1));
        if (G.elems.size() > cap)
          throw TooLargeError("group closure exceeds cap " + std::to_string(cap));
      }
    }
  }
  return G;
}

}  // namespace

FiniteGroup brute_force_group(const FormSpec& spec, const BuildOptions& opts) {
  auto field = build_entry_field(spec);
  int dim = spec.dim();
  int cells = dim * dim;
  long double candidates = 1;
  for (int i = 0; i < cells; ++i) candidates *= field->size;
  if (candidates > static_cast<long double>(opts.brute_force_candidate_cap))
    throw TooLargeError("brute force candidate space too large");
  FiniteGroup G;
  G.form = spec;
  G.field = field;
  int64_t total = 1;
  for (int i = 0; i < cells; ++i) total *= field->size;
  for (int64_t code = 0; code < total; ++code) {
    Mat m;
    m.dim = static_cast<uint8_t>(dim);
    int64_t t = code;
    for (int i = 0; i < cells; ++i) {
      m.e[i] = static_cast<uint8_t>(t % field->size);
      t /= field->size;
    }
    if (spec.kind == FormKind::gl && mat_det(*field, m) == 0) continue;
    if (!satisfies_form(spec, *field, m)) continue;
    G.index.emplace(m, static_cast<uint32_t>(G.elems.size()));
    G.elems.push_back(m);
    if (G.elems.size() > opts.order_cap)
      throw TooLargeError("group order exceeds cap " + std::to_string(opts.order_cap));
  }
  // Put the identity first to match the closure convention.
  Mat id = mat_identity(*field, dim);
  uint32_t pos = G.index.at(id);
  if (pos != 0) {
    std::swap(G.elems[0], G.elems[pos]);
    G.index[G.elems[pos]] = pos;
    G.index[id] = 0;
  }
  G.inverses();
  return G;
}

FiniteGroup build_group(const FormSpec& spec, const BuildOptions& opts) {
  uint64_t predicted = order_formula(spec);
  if (predicted > opts.order_cap)
    throw TooLargeError("predicted order " + std::to_string(predicted) + " exceeds cap " +
                        std::to_string(opts.order_cap));
  auto field = build_entry_field(spec);
  FiniteGroup G =
      closure_from_generators(spec, field, group_generators(spec, *field), opts.order_cap);
  G.inverses();  // finish construction; the group is immutable from here on
  if (G.order() != predicted)
    throw ClosureIncompleteError("closure order " + std::to_string(G.order()) +
                                 " != formula order " + std::to_string(predicted));
  if (opts.cross_check) {
    int cells = spec.dim() * spec.dim();
    long double candidates = 1;
    for (int i = 0; i < cells; ++i) candidates *= field->size;
    if (candidates <= static_cast<long double>(opts.brute_force_candidate_cap)) {
      FiniteGroup brute = brute_force_group(spec, opts);
      if (brute.order() != G.order())
        throw ClosureIncompleteError("brute-force filter disagrees with closure");
      for (const Mat& m : brute.elems)
        if (!G.index.count(m))
          throw ClosureIncompleteError("brute-force element missing from closure");
    }
  }
  return G;
}

std::vector<std::pair<uint8_t, uint64_t>> determinant_distribution(const FiniteGroup& G) {
  std::unordered_map<uint8_t, uint64_t> counts;
  for (const Mat& m : G.elems) counts[mat_det(*G.field, m)]++;
  std::vector<std::pair<uint8_t, uint64_t>> out(counts.begin(), counts.end());
  std::sort(out.begin(), out.end());
  return out;
}

FormSpec levi_gl_spec(const FormSpec& spec) {
  int64_t q = (spec.kind == FormKind::gu) ? spec.q * spec.q : spec.q;
  return FormSpec{FormKind::gl, spec.n, q};
}

Mat levi_block(const ParabolicData& pd, uint32_t p) {
  const Mat& m = pd.G->elems[p];
  int n = pd.G->form.n;
  Mat a;
  a.dim = static_cast<uint8_t>(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a.at(i, j) = m.at(i, j);
  return a;
}

ParabolicData siegel_parabolic(const FiniteGroup& G) {
  if (G.form.kind == FormKind::gl)
    throw DomainMismatchError("siegel_parabolic: needs a form group");
  int n = G.form.n;
  ParabolicData pd;
  pd.G = &G;
  pd.p_ordinal.assign(G.order(), -1);
  auto lower_left_zero = [&](const Mat& m) {
    for (int i = n; i < 2 * n; ++i)
      for (int j = 0; j < n; ++j)
        if (m.at(i, j) != 0) return false;
    return true;
  };
  auto upper_right_zero = [&](const Mat& m) {
    for (int i = 0; i < n; ++i)
      for (int j = n; j < 2 * n; ++j)
        if (m.at(i, j) != 0) return false;
    return true;
  };
  auto diag_identity = [&](const Mat& m) {
    Mat id = mat_identity(*G.field, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (m.at(i, j) != id.at(i, j) || m.at(n + i, n + j) != id.at(i, j)) return false;
    return true;
  };
  for (uint32_t i = 0; i < G.order(); ++i) {
    const Mat& m = G.elems[i];
    if (!lower_left_zero(m)) continue;
    pd.p_ordinal[i] = static_cast<int32_t>(pd.P.size());
    pd.P.push_back(i);
    if (upper_right_zero(m)) pd.L.push_back(i);
    if (diag_identity(m)) pd.U.push_back(i);
  }
  if (pd.P.size() != pd.L.size() * pd.U.size())
    throw Error("siegel_parabolic: |P| != |L| * |U|");

  // Double-coset sweep with factorization tracking. P is generated by the
  // Levi embeddings and the unipotent elements from the group generator set.
  std::vector<Mat> p_gens;
  for (const Mat& g : group_generators(G.form, *G.field)) {
    auto idx = G.find(g);
    if (idx && pd.p_ordinal[*idx] >= 0) p_gens.push_back(g);
  }
  std::vector<uint32_t> p_gen_idx;
  for (const Mat& g : p_gens) p_gen_idx.push_back(G.index_of(g));

  pd.coset_id.assign(G.order(), UINT32_MAX);
  pd.fact_left.assign(G.order(), 0);
  pd.fact_right.assign(G.order(), 0);
  for (uint32_t g = 0; g < G.order(); ++g) {
    if (pd.coset_id[g] != UINT32_MAX) continue;
    uint32_t cid = static_cast<uint32_t>(pd.coset_rep.size());
    pd.coset_rep.push_back(g);
    pd.coset_elems.emplace_back();
    std::deque<uint32_t> queue;
    pd.coset_id[g] = cid;
    pd.fact_left[g] = 0;
    pd.fact_right[g] = 0;
    pd.coset_elems[cid].push_back(g);
    queue.push_back(g);
    while (!queue.empty()) {
      uint32_t cur = queue.front();
      queue.pop_front();
      for (uint32_t pg : p_gen_idx) {
        // left: (pg * p) w p'
        uint32_t left = G.mul(pg, cur);
        if (pd.coset_id[left] == UINT32_MAX) {
          pd.coset_id[left] = cid;
          pd.fact_left[left] = G.mul(pg, pd.fact_left[cur]);
          pd.fact_right[left] = pd.fact_right[cur];
          pd.coset_elems[cid].push_back(left);
          queue.push_back(left);
        }
        // right: p w (p' * pg)
        uint32_t right = G.mul(cur, pg);
        if (pd.coset_id[right] == UINT32_MAX) {
          pd.coset_id[right] = cid;
          pd.fact_left[right] = pd.fact_left[cur];
          pd.fact_right[right] = G.mul(pd.fact_right[cur], pg);
          pd.coset_elems[cid].push_back(right);
          queue.push_back(right);
        }
      }
    }
  }
  return pd;
}

uint32_t double_coset_of(const ParabolicData& pd, uint32_t g) {
  return pd.coset_rep[pd.coset_id[g]];
}

uint64_t parahoric_index(const ParabolicData& pd, uint32_t coset) {
  return pd.coset_elems[coset].size() / pd.P.size();
}

std::vector<std::vector<uint32_t>> conjugacy_classes(const FiniteGroup& G,
                                                     const std::vector<uint32_t>& members) {
  const auto& inv = G.inverses();
  std::unordered_map<uint32_t, char> in_members;
  for (uint32_t m : members) in_members[m] = 1;
  std::unordered_map<uint32_t, char> seen;
  std::vector<std::vector<uint32_t>> classes;
  for (uint32_t m : members) {
    if (seen.count(m)) continue;
    std::vector<uint32_t> cls;
    for (uint32_t h : members) {
      uint32_t c = G.mul(G.mul(h, m), inv[h]);
      if (!in_members.count(c)) throw NotSubgroupError("members not closed under conjugation");
      if (!seen.count(c)) {
        seen[c] = 1;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

// ---- cache ----------------------------------------------------------------

namespace {
constexpr char kMagic[6] = {'P', 'I', 'N', 'D', 'G', '1'};

void put_u64(std::ofstream& out, uint64_t v) {
  for (int i = 0; i < 8; ++i) out.put(static_cast<char>((v >> (8 * i)) & 0xff));
}

uint64_t get_u64(std::ifstream& in) {
  uint64_t v = 0;
  for (int i = 0; i < 8; ++i) {
    int c = in.get();
    if (c == EOF) throw CacheError("cache file truncated");
    v |= static_cast<uint64_t>(static_cast<unsigned char>(c)) << (8 * i);
  }
  return v;
}
}  // namespace

std::string cache_file_name(const FormSpec& spec) {
  return std::string(to_string(spec.kind)) + "_n" + std::to_string(spec.n) + "_q" +
         std::to_string(spec.q) + ".pind";
}

void save_group_cache(const FiniteGroup& G, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw CacheError("cannot open cache file for writing: " + path);
  out.write(kMagic, sizeof kMagic);
  out.put(static_cast<char>(G.form.kind));
  out.put(static_cast<char>(G.form.n));
  put_u64(out, static_cast<uint64_t>(G.form.q));
  out.put(static_cast<char>(G.form.dim()));
  put_u64(out, G.order());
  int cells = G.form.dim() * G.form.dim();
  for (const Mat& m : G.elems)
    out.write(reinterpret_cast<const char*>(m.e.data()), cells);
}

std::optional<FiniteGroup> load_group_cache(const FormSpec& spec, const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  char magic[6];
  in.read(magic, 6);
  if (in.gcount() != 6 || std::memcmp(magic, kMagic, 6) != 0) return std::nullopt;  // stale
  int kind = in.get();
  int n = in.get();
  uint64_t q = get_u64(in);
  int dim = in.get();
  if (kind != static_cast<int>(spec.kind) || n != spec.n ||
      q != static_cast<uint64_t>(spec.q) || dim != spec.dim())
    return std::nullopt;
  uint64_t count = get_u64(in);
  FiniteGroup G;
  G.form = spec;
  G.field = build_entry_field(spec);
  int cells = dim * dim;
  G.elems.reserve(count);
  for (uint64_t i = 0; i < count; ++i) {
    Mat m;
    m.dim = static_cast<uint8_t>(dim);
    in.read(reinterpret_cast<char*>(m.e.data()), cells);
    if (in.gcount() != cells) throw CacheError("cache file truncated: " + path);
    // Re-verify the form equation so a corrupt cache cannot leak in.
    if (!satisfies_form(spec, *G.field, m)) throw CacheError("cache element fails form check");
    G.index.emplace(m, static_cast<uint32_t>(G.elems.size()));
    G.elems.push_back(m);
  }
  if (G.order() != order_formula(spec)) throw CacheError("cache order mismatch");
  G.inverses();
  return G;
}

}  // namespace parind::fingrp
