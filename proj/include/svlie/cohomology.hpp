#pragma once

// Degree-alpha derivations L -> V on a window as an exact linear system.
//
// Unknowns are the coefficients of D(g) on every target key of degree
// deg(g) + alpha inside the window. An equation is the t-component of
// D([g,h]) - g.D(h) + h.D(g) = 0 and is emitted only when every unknown it
// truly involves lies inside the window. Dimensions are reported after
// restricting to the interior half-window: columns are ordered exterior first,
// so the interior pivot count gives rank(A) - rank(A_exterior) and
//   dim restrict(Der) = #interior columns - #interior pivots.

#include "svlie/catalog.hpp"
#include "svlie/sparse_linalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace svlie {

enum class TargetSpace { Algebra, TensorSquare, CenterTensor };

inline std::string to_string(TargetSpace t) {
  switch (t) {
  case TargetSpace::Algebra: return "algebra";
  case TargetSpace::TensorSquare: return "tensor-square";
  case TargetSpace::CenterTensor: return "center-tensor";
  }
  return "?";
}

inline bool in_band(const BasisIndex &, const BasisIndex &, int) { return true; }
inline bool in_band(const BasisIndex &g, const IndexPair &k, int radius) {
  const int reach = std::abs(g.dd) + radius;
  return std::abs(k[0].dd) <= reach && std::abs(k[1].dd) <= reach;
}

/// Default support band: a quarter of the window width, so that the band is
/// strictly inside the interior half-window.
inline int default_radius(const Window &w) { return (w.hi - w.lo) / 8; }

template <class Key> using ValueOf = LinearCombination<Key>;

template <class Key> struct Unknown {
  BasisIndex gen;
  Key key;

  friend auto operator<=>(const Unknown &, const Unknown &) = default;
};

struct RowTag {
  BasisIndex x;
  BasisIndex y;
  std::size_t component; // index into the target key list of the system
};

template <class Key> struct LinearSystem {
  AlgebraParams params;
  TargetSpace target = TargetSpace::Algebra;
  HalfInt alpha{};
  Window window;
  std::vector<Unknown<Key>> unknowns; // exterior block, then interior block
  std::size_t interior_begin = 0;
  std::vector<linalg::SparseVector> rows;
  std::vector<RowTag> provenance;
  std::vector<Key> components; // keys referenced by provenance
  std::map<Unknown<Key>, std::size_t> column;
  int radius = 0; // support band in doubled degrees, tensor keys only

  /// D(g) may be nonzero on k only when every slot of k has
  /// |dd| <= |dd(g)| + radius; outside the band a coefficient is a known zero.
  bool in_band(const BasisIndex &g, const Key &k) const { return svlie::in_band(g, k, radius); }

  std::size_t interior_size() const { return unknowns.size() - interior_begin; }

  std::optional<std::size_t> column_of(const BasisIndex &g, const Key &k) const {
    auto it = column.find({g, k});
    if (it == column.end()) return std::nullopt;
    return it->second;
  }
};

namespace detail {

inline std::vector<BasisIndex> target_keys(int dd, const Window &w, const AlgebraParams &p, BasisIndex *) {
  if (!w.contains(dd)) return {};
  return generators_at(dd, p);
}

inline std::vector<IndexPair> target_keys(int dd, const Window &w, const AlgebraParams &p, IndexPair *) {
  std::vector<IndexPair> out;
  for (const auto &a : generators_in(w, p)) {
    int rest = dd - a.dd;
    if (!w.contains(rest)) continue;
    for (const auto &b : generators_at(rest, p)) out.push_back({a, b});
  }
  return out;
}

} // namespace detail

/// Membership predicate for the target subspace (C (x) L + L (x) C needs the
/// center indices; the center of L^s_lambda is spanned by basis vectors).
template <class Key> struct TargetFilter {
  TargetSpace space = TargetSpace::Algebra;
  std::vector<BasisIndex> center;

  bool operator()(const Key &k) const {
    if constexpr (std::is_same_v<Key, IndexPair>) {
      if (space == TargetSpace::CenterTensor) {
        auto central_slot = [&](const BasisIndex &b) {
          return std::find(center.begin(), center.end(), b) != center.end();
        };
        return central_slot(k[0]) || central_slot(k[1]);
      }
    }
    return true;
  }
};

inline std::vector<BasisIndex> center_indices(const AlgebraParams &p, const Window &w) {
  std::vector<BasisIndex> out;
  for (const auto &z : center_in_window(p, w)) {
    if (z.size() != 1) throw std::logic_error("center is not spanned by basis vectors");
    out.push_back(z.begin()->first);
  }
  return out;
}

template <class Key>
std::vector<Key> target_basis(int dd, const Window &w, const AlgebraParams &p, const TargetFilter<Key> &keep) {
  auto all = detail::target_keys(dd, w, p, static_cast<Key *>(nullptr));
  std::vector<Key> out;
  for (auto &k : all)
    if (keep(k)) out.push_back(k);
  return out;
}

template <class Key> TargetFilter<Key> make_filter(TargetSpace t, const AlgebraParams &p, const Window &w) {
  TargetFilter<Key> f;
  f.space = t;
  if (t == TargetSpace::CenterTensor) f.center = center_indices(p, w);
  return f;
}

template <class Key>
LinearSystem<Key> assemble(const AlgebraParams &p, TargetSpace target, HalfInt alpha, const Window &w,
                           std::optional<int> radius = std::nullopt) {
  if (w.lo > w.hi || !w.contains(0)) throw std::invalid_argument("empty window");
  LinearSystem<Key> sys;
  sys.radius = radius.value_or(default_radius(w));
  sys.params = p;
  sys.target = target;
  sys.alpha = alpha;
  sys.window = w;
  const Window in = w.interior();
  const auto keep = make_filter<Key>(target, p, w);
  const auto gens = generators_in(w, p);

  std::vector<Unknown<Key>> ext, inn;
  for (const auto &g : gens)
    for (const auto &k : target_basis<Key>(g.dd + alpha.twice, w, p, keep))
      if (sys.in_band(g, k)) (in.contains(g) && in.contains(k) ? inn : ext).push_back({g, k});
  sys.interior_begin = ext.size();
  sys.unknowns = std::move(ext);
  sys.unknowns.insert(sys.unknowns.end(), inn.begin(), inn.end());
  for (std::size_t i = 0; i < sys.unknowns.size(); ++i) sys.column.emplace(sys.unknowns[i], i);

  linalg::RowBuilder rb;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      const auto &x = gens[i], &y = gens[j];
      BasisBracket br = bracket_basis_unchecked(x, y, p);
      bool inside = true;
      for (const auto &t : br) inside = inside && w.contains(t.index);
      if (!inside) continue;
      for (const auto &t : target_basis<Key>(x.dd + y.dd + alpha.twice, w, p, keep)) {
        rb.clear();
        bool exact = true;
        for (const auto &b : br)
          if (sys.in_band(b.index, t)) rb.add(sys.column.at({b.index, t}), b.coeff);
        // - x . D(y)
        for (const auto &[u, c] : key_preimages(x, t, p)) {
          if (!keep(u) || !sys.in_band(y, u)) continue;
          if (!w.contains(u)) {
            exact = false;
            break;
          }
          rb.add(sys.column.at({y, u}), -c);
        }
        if (!exact) continue;
        // + y . D(x)
        for (const auto &[u, c] : key_preimages(y, t, p)) {
          if (!keep(u) || !sys.in_band(x, u)) continue;
          if (!w.contains(u)) {
            exact = false;
            break;
          }
          rb.add(sys.column.at({x, u}), c);
        }
        if (!exact) continue;
        auto row = rb.finish();
        if (row.empty()) continue;
        sys.rows.push_back(std::move(row));
        sys.provenance.push_back({x, y, sys.components.size()});
        sys.components.push_back(t);
      }
    }
  return sys;
}

/// Coordinates of a derivation table in the unknowns of a system; components
/// that are not unknowns (outside the window or the target) are dropped.
template <class Key, class V>
linalg::SparseVector coordinates(const LinearSystem<Key> &sys, const DerivationTable<V> &d) {
  linalg::RowBuilder rb;
  for (const auto &[g, v] : d.values)
    for (const auto &[k, c] : v)
      if (auto col = sys.column_of(g, k)) rb.add(*col, c);
  return rb.finish();
}

/// Interior part, re-indexed from zero.
template <class Key> linalg::SparseVector restrict_interior(const LinearSystem<Key> &sys, const linalg::SparseVector &x) {
  linalg::SparseVector out;
  for (const auto &[c, q] : x)
    if (c >= sys.interior_begin) out.emplace_back(c - sys.interior_begin, q);
  return out;
}

template <class Key> bool in_kernel(const LinearSystem<Key> &sys, const linalg::SparseVector &x) {
  if (x.empty()) return true;
  for (const auto &row : sys.rows)
    if (linalg::dot(row, x) != 0) return false;
  return true;
}

/// Coordinates of inner derivations x -> x.v over every window-supported v of
/// degree alpha whose derivation stays inside the support band. Finite
/// elements qualify; a truncated formal sum (a Casimir-type element) leaves
/// out-of-band boundary terms and does not, so its derivation counts as outer.
template <class Key> std::vector<linalg::SparseVector> inner_generators(const LinearSystem<Key> &sys) {
  const auto &p = sys.params;
  const auto &w = sys.window;
  const auto keep = make_filter<Key>(sys.target, p, w);
  const auto vs = target_basis<Key>(sys.alpha.twice, w, p, keep);
  std::vector<DerivationTable<ValueOf<Key>>> tables;
  std::map<std::pair<BasisIndex, Key>, linalg::RowBuilder> escape;
  const auto gens = generators_in(w, p);
  for (std::size_t j = 0; j < vs.size(); ++j) {
    tables.push_back(inner(ValueOf<Key>(vs[j]), p, w));
    // untruncated: boundary terms past the window edge must be seen too
    for (const auto &g : gens)
      for (const auto &[k, c] : act(g, ValueOf<Key>(vs[j]), p))
        if (!sys.in_band(g, k)) escape[{g, k}].add(j, c);
  }
  linalg::Echelon band(vs.size());
  for (auto &[gk, rb] : escape) band.insert(rb.finish());
  std::vector<linalg::SparseVector> out;
  for (const auto &kv : band.kernel_basis()) {
    linalg::RowBuilder rb;
    for (const auto &[j, q] : kv)
      for (const auto &[col, c] : coordinates(sys, tables[j])) rb.add(col, q * c);
    out.push_back(rb.finish());
  }
  return out;
}

struct Certificate {
  std::vector<std::string> names;
  bool all_in_kernel = true;
  std::size_t rank_mod_inner = 0;
};

struct CohomologyReport {
  AlgebraParams params;
  TargetSpace target = TargetSpace::Algebra;
  HalfInt alpha{};
  Window window;
  Window interior;
  std::size_t unknowns = 0;
  std::size_t equations = 0;
  std::size_t rank = 0;
  std::size_t dim_der = 0;
  std::size_t dim_inn = 0;
  std::size_t dim_h1 = 0;
  int radius = 0;
  bool inner_in_kernel = true;
  std::optional<Certificate> certificate;
};

/// Dimensions of Der, Inn and H^1 in degree alpha after interior restriction.
/// `candidates` (optional) are derivation tables whose span modulo inner
/// derivations is measured, e.g. the catalog's parameter basis.
template <class Key>
CohomologyReport solve_h1(const LinearSystem<Key> &sys,
                          const std::vector<NamedDerivation<ValueOf<Key>>> *candidates = nullptr) {
  const auto &p = sys.params;
  const auto &w = sys.window;
  CohomologyReport rep;
  rep.params = p;
  rep.target = sys.target;
  rep.alpha = sys.alpha;
  rep.window = w;
  rep.interior = w.interior();
  rep.radius = sys.radius;
  rep.unknowns = sys.unknowns.size();
  rep.equations = sys.rows.size();

  linalg::Echelon ech(sys.unknowns.size());
  for (const auto &r : sys.rows) ech.insert(r);
  rep.rank = ech.rank();
  rep.dim_der = sys.interior_size() - ech.pivots_in(sys.interior_begin, sys.unknowns.size());

  linalg::Echelon inn(sys.interior_size());
  for (const auto &x : inner_generators(sys)) {
    rep.inner_in_kernel = rep.inner_in_kernel && in_kernel(sys, x);
    inn.insert(restrict_interior(sys, x));
  }
  rep.dim_inn = inn.rank();
  rep.dim_h1 = rep.dim_der >= rep.dim_inn ? rep.dim_der - rep.dim_inn : 0;

  if (candidates) {
    Certificate cert;
    std::size_t before = inn.rank();
    for (const auto &nd : *candidates) {
      cert.names.push_back(nd.name);
      auto x = coordinates(sys, nd.table);
      cert.all_in_kernel = cert.all_in_kernel && in_kernel(sys, x);
      inn.insert(restrict_interior(sys, x));
    }
    cert.rank_mod_inner = inn.rank() - before;
    rep.certificate = cert;
  }
  return rep;
}

namespace detail {

template <class Key>
CohomologyReport solve_dispatch(const AlgebraParams &p, TargetSpace target, HalfInt alpha, const Window &w,
                                bool with_catalog) {
  auto sys = assemble<Key>(p, target, alpha, w);
  std::optional<std::vector<NamedDerivation<ValueOf<Key>>>> cands;
  if (with_catalog && alpha.twice == 0 && target != TargetSpace::CenterTensor) {
    try {
      cands = catalog_parameter_basis<ValueOf<Key>>(p, w);
    } catch (const CaseError &) {
    }
  }
  return solve_h1(sys, cands ? &*cands : nullptr);
}

} // namespace detail

/// Assemble and solve in one step. At degree 0 the catalog parameter basis of
/// the case row (when there is one) is attached as the quotient certificate.
inline CohomologyReport solve_h1(const AlgebraParams &p, TargetSpace target, HalfInt alpha, const Window &w,
                                 bool with_catalog = true) {
  if (target == TargetSpace::Algebra) return detail::solve_dispatch<BasisIndex>(p, target, alpha, w, with_catalog);
  return detail::solve_dispatch<IndexPair>(p, target, alpha, w, with_catalog);
}

} // namespace svlie
