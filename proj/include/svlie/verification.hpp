#pragma once

// Window-checkable structural statements about L^s_lambda, each computed as an
// exact subspace comparison.

#include "svlie/cohomology.hpp"
#include "svlie/parallel.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace svlie {

/// Reads a solution vector back as a derivation table on the system's window.
template <class Key>
DerivationTable<ValueOf<Key>> table_from_coordinates(const LinearSystem<Key> &sys, const linalg::SparseVector &x) {
  DerivationTable<ValueOf<Key>> d;
  d.window = sys.window;
  d.degree = sys.alpha;
  std::map<BasisIndex, ValueOf<Key>> vals;
  for (const auto &[col, q] : x) {
    const auto &u = sys.unknowns[col];
    vals[u.gen].add(u.key, q);
  }
  for (auto &[g, v] : vals) d.set(g, std::move(v));
  return d;
}

/// Same rule seen only on a smaller window.
template <class V> DerivationTable<V> restrict_table(const DerivationTable<V> &d, const Window &w) {
  DerivationTable<V> out;
  out.window = w;
  out.degree = d.degree;
  for (const auto &[g, v] : d.values)
    if (w.contains(g)) out.set(g, truncate(v, w));
  return out;
}

/// Solutions of the system (full coordinates), one per free column.
template <class Key> std::vector<linalg::SparseVector> derivation_basis(const LinearSystem<Key> &sys) {
  linalg::Echelon ech(sys.unknowns.size());
  for (const auto &r : sys.rows) ech.insert(r);
  return ech.kernel_basis();
}

/// Solutions whose interior restrictions are independent modulo the inner
/// space: representatives of an H^1 basis.
template <class Key> std::vector<linalg::SparseVector> h1_representatives(const LinearSystem<Key> &sys) {
  linalg::Echelon quot(sys.interior_size());
  for (const auto &x : inner_generators(sys)) quot.insert(restrict_interior(sys, x));
  std::vector<linalg::SparseVector> out;
  for (const auto &x : derivation_basis(sys))
    if (quot.insert(restrict_interior(sys, x))) out.push_back(x);
  return out;
}

// ---------------------------------------------------------------------------

struct CenterTensorReport {
  AlgebraParams params;
  Window window;
  std::size_t center_dim = 0;
  std::size_t h1_algebra = 0;
  std::size_t left = 0;  // dim H^1(L, C (x) L + L (x) C)_0
  std::size_t right = 0; // dim of C (x) H^1 + H^1 (x) C inside it
  std::size_t overlap = 0;
  bool products_in_kernel = true;

  bool passed() const { return left == right && products_in_kernel; }
};

/// Compares H^1 with values in C (x) L + L (x) C against the span of z (x) D
/// and D (x) z over center elements z and H^1(L, L)_0 representatives D.
inline CenterTensorReport verify_center_tensor_identity(const AlgebraParams &p, const Window &w) {
  CenterTensorReport rep;
  rep.params = p;
  rep.window = w;
  const auto center = center_in_window(p, w);
  rep.center_dim = center.size();

  const auto alg = assemble<BasisIndex>(p, TargetSpace::Algebra, HalfInt{0}, w);
  const auto reps = h1_representatives(alg);
  rep.h1_algebra = reps.size();

  const auto ct = assemble<IndexPair>(p, TargetSpace::CenterTensor, HalfInt{0}, w);
  rep.left = solve_h1(ct).dim_h1;

  linalg::Echelon span(ct.interior_size());
  for (const auto &x : inner_generators(ct)) span.insert(restrict_interior(ct, x));
  const std::size_t base = span.rank();
  for (const auto &x : reps) {
    const auto d = table_from_coordinates(alg, x);
    for (const auto &z : center)
      for (bool left_leg : {true, false}) {
        TensorDerivation t;
        t.window = w;
        t.degree = HalfInt{0};
        for (const auto &[g, v] : d.values) t.set(g, left_leg ? tensor(z, v) : tensor(v, z));
        const auto coords = coordinates(ct, t);
        rep.products_in_kernel = rep.products_in_kernel && in_kernel(ct, coords);
        span.insert(restrict_interior(ct, coords));
      }
  }
  rep.right = span.rank() - base;
  rep.overlap = 2 * rep.center_dim * rep.h1_algebra - rep.right;
  return rep;
}

// ---------------------------------------------------------------------------

namespace detail {

/// Degree-0 keys of the window: invariants have degree 0 because L_0 acts on
/// a homogeneous tensor by its degree.
template <class Key> std::vector<Key> degree_zero_keys(const AlgebraParams &p, const Window &w) {
  return target_keys(0, w, p, static_cast<Key *>(nullptr));
}

template <class Key> std::map<Key, std::size_t> index_keys(const std::vector<Key> &keys) {
  std::map<Key, std::size_t> out;
  for (std::size_t i = 0; i < keys.size(); ++i) out.emplace(keys[i], i);
  return out;
}

template <class Key>
linalg::SparseVector coords_in(const LinearCombination<Key> &v, const std::map<Key, std::size_t> &index) {
  linalg::RowBuilder rb;
  for (const auto &[k, c] : v) {
    auto it = index.find(k);
    if (it == index.end()) throw std::logic_error("element outside the candidate keys");
    rb.add(it->second, c);
  }
  return rb.finish();
}

inline IndexPair unordered(const IndexPair &k) { return k[1] < k[0] ? IndexPair{k[1], k[0]} : k; }

} // namespace detail

struct InvariantReport {
  AlgebraParams params;
  Window window;
  int order = 1;
  std::size_t candidates = 0;
  std::size_t kernel_dim = 0;
  std::size_t center_products = 0;
  bool products_invariant = true;
  bool kernel_in_products = true;

  bool passed() const { return products_invariant && kernel_in_products && kernel_dim == center_products; }
};

/// Window tensors of order 1 or 2 killed by every generator of the window,
/// against the span of products of center elements. The action is applied
/// without truncation, so no boundary term is lost.
inline InvariantReport verify_invariants_are_central(const AlgebraParams &p, int order, const Window &w) {
  if (order != 1 && order != 2) throw std::invalid_argument("tensor order must be 1 or 2");
  InvariantReport rep;
  rep.params = p;
  rep.window = w;
  rep.order = order;
  const auto center = center_in_window(p, w);
  const auto gens = generators_in(w, p);

  auto run = [&](auto key_tag, const auto &products) {
    using Key = decltype(key_tag);
    const auto keys = detail::degree_zero_keys<Key>(p, w);
    const auto index = detail::index_keys(keys);
    rep.candidates = keys.size();
    std::map<std::pair<BasisIndex, Key>, linalg::RowBuilder> rows;
    for (std::size_t j = 0; j < keys.size(); ++j)
      for (const auto &g : gens)
        for (const auto &[k, c] : act(g, LinearCombination<Key>(keys[j]), p)) rows[{g, k}].add(j, c);
    linalg::Echelon eq(keys.size());
    for (auto &[gk, rb] : rows) eq.insert(rb.finish());
    const auto kernel = eq.kernel_basis();
    rep.kernel_dim = kernel.size();

    linalg::Echelon prod(keys.size());
    for (const auto &t : products) {
      for (const auto &g : gens) rep.products_invariant = rep.products_invariant && act(g, t, p).is_zero();
      prod.insert(detail::coords_in(t, index));
    }
    rep.center_products = prod.rank();
    for (const auto &x : kernel) rep.kernel_in_products = rep.kernel_in_products && prod.in_span(x);
  };

  if (order == 1) {
    run(BasisIndex{}, center);
  } else {
    std::vector<Tensor2> products;
    for (const auto &a : center)
      for (const auto &b : center) products.push_back(tensor(a, b));
    run(IndexPair{}, products);
  }
  return rep;
}

// ---------------------------------------------------------------------------

struct SkewImageReport {
  AlgebraParams params;
  Window window;
  std::size_t candidates = 0;
  std::size_t dim_w = 0;        // {v : g.v skew for every window generator g}
  std::size_t sym_rank = 0;     // rank of (1 + tau) W
  std::size_t center_sym = 0;   // rank of (1 + tau)(C (x) C)
  bool inclusion = true;        // (1 + tau) W inside (1 + tau)(C (x) C)

  bool passed() const { return inclusion; }
};

/// A generator g with g.v not skew, if there is one in the window.
inline std::optional<BasisIndex> skew_image_witness(const Tensor2 &v, const AlgebraParams &p, const Window &w) {
  for (const auto &g : generators_in(w, p))
    if (!is_skew(act(g, v, p))) return g;
  return std::nullopt;
}

/// W is computed on degree-0 window tensors: L_0 scales a degree-q component
/// by q, so for q != 0 the component itself is already skew.
inline SkewImageReport verify_skew_image_lemma(const AlgebraParams &p, const Window &w) {
  SkewImageReport rep;
  rep.params = p;
  rep.window = w;
  const auto keys = detail::degree_zero_keys<IndexPair>(p, w);
  const auto index = detail::index_keys(keys);
  rep.candidates = keys.size();
  const auto gens = generators_in(w, p);

  // (1 + tau) X vanishes iff X[k] + X[tau k] = 0 on every unordered key.
  std::map<std::pair<BasisIndex, IndexPair>, linalg::RowBuilder> rows;
  for (std::size_t j = 0; j < keys.size(); ++j)
    for (const auto &g : gens)
      for (const auto &[k, c] : act(g, Tensor2(keys[j]), p)) rows[{g, detail::unordered(k)}].add(j, c);
  linalg::Echelon eq(keys.size());
  for (auto &[gk, rb] : rows) eq.insert(rb.finish());
  const auto wbasis = eq.kernel_basis();
  rep.dim_w = wbasis.size();

  std::map<IndexPair, std::size_t> sym_index;
  for (const auto &k : keys) sym_index.emplace(detail::unordered(k), sym_index.size());
  auto sym = [&](const Tensor2 &t) {
    linalg::RowBuilder rb;
    for (const auto &[k, c] : t) rb.add(sym_index.at(detail::unordered(k)), c);
    return rb.finish();
  };

  linalg::Echelon span(sym_index.size());
  const auto center = center_in_window(p, w);
  for (const auto &a : center)
    for (const auto &b : center) span.insert(sym(tensor(a, b)));
  rep.center_sym = span.rank();
  linalg::Echelon image(sym_index.size());
  for (const auto &x : wbasis) {
    Tensor2 v;
    for (const auto &[j, q] : x) v.add(keys[j], q);
    const auto s = sym(v);
    image.insert(s);
    rep.inclusion = rep.inclusion && span.in_span(s);
  }
  rep.sym_rank = image.rank();
  return rep;
}

// ---------------------------------------------------------------------------

/// The eight case rows with a tensor-valued catalog entry; generic lambda is
/// sampled by 3 (s = 1/2) and 5 (s = 0).
inline std::vector<AlgebraParams> table_case_rows(bool central) {
  return {make_params(1, -1, central), make_params(1, -2, central), make_params(1, 3, central),
          make_params(0, 0, central),  make_params(0, -1, central), make_params(0, -2, central),
          make_params(0, 1, central),  make_params(0, 5, central)};
}

/// Triangular coboundary structures are forced exactly for the centerless
/// algebras other than (s, lambda) = (0, 0).
inline bool expected_triangular(const AlgebraParams &p) { return !p.central && !(p.twisted() && p.lambda == 0); }

struct RegressionRow {
  CohomologyReport report;
  std::size_t expected_dim = 0; // catalog parameter count
  bool triangular = false;      // verdict from the computed dimension
  bool expected_verdict = false;

  bool certificate_ok() const {
    return report.certificate && report.certificate->all_in_kernel &&
           report.certificate->rank_mod_inner == report.certificate->names.size();
  }
  bool passed() const {
    return report.dim_h1 == expected_dim && triangular == expected_verdict && certificate_ok();
  }
};

inline RegressionRow regression_row(const AlgebraParams &p, const Window &w) {
  RegressionRow row;
  row.report = solve_h1(p, TargetSpace::TensorSquare, HalfInt{0}, w);
  row.expected_dim = catalog_parameter_basis<Tensor2>(p, w).size();
  row.triangular = row.report.dim_h1 == 0;
  row.expected_verdict = expected_triangular(p);
  return row;
}

/// Degree-0 tensor H^1 across the case rows, rows solved concurrently.
inline std::vector<RegressionRow> paper_table_regression(const std::vector<AlgebraParams> &cases, const Window &w) {
  return parallel_map<RegressionRow>(cases.size(), [&](std::size_t i) { return regression_row(cases[i], w); });
}

} // namespace svlie
