#pragma once

#include "svlie/tensor.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace svlie {

enum class Target { Algebra, TensorSquare };

inline std::string to_string(Target t) { return t == Target::Algebra ? "algebra" : "tensor-square"; }

template <class V> constexpr Target target_of();
template <> constexpr Target target_of<Element>() { return Target::Algebra; }
template <> constexpr Target target_of<Tensor2>() { return Target::TensorSquare; }

// Per-key helpers shared by the derivation checks and the solver. A key is a
// BasisIndex (values in L) or an IndexPair (values in L (x) L).

template <class Out>
void act_on_key(const BasisIndex &g, const BasisIndex &key, const Rational &scale, const AlgebraParams &p, Out &out) {
  for (const auto &t : bracket_basis_unchecked(g, key, p)) out.add(t.index, scale * t.coeff);
}

template <class Key> LinearCombination<Key> act(const BasisIndex &g, const LinearCombination<Key> &v,
                                                const AlgebraParams &p) {
  LinearCombination<Key> out;
  for (const auto &[k, c] : v) act_on_key(g, k, c, p, out);
  return out;
}

/// Keys u (any degree) such that g . u has a nonzero t-coefficient.
inline std::vector<std::pair<BasisIndex, Rational>> key_preimages(const BasisIndex &g, const BasisIndex &t,
                                                                  const AlgebraParams &p) {
  std::vector<std::pair<BasisIndex, Rational>> out;
  for (const auto &pre : ad_preimages(g, t, p)) out.emplace_back(pre.index, pre.coeff);
  return out;
}

template <std::size_t R>
std::vector<std::pair<std::array<BasisIndex, R>, Rational>> key_preimages(const BasisIndex &g,
                                                                         const std::array<BasisIndex, R> &t,
                                                                         const AlgebraParams &p) {
  std::vector<std::pair<std::array<BasisIndex, R>, Rational>> out;
  for (std::size_t slot = 0; slot < R; ++slot)
    for (const auto &pre : ad_preimages(g, t[slot], p)) {
      auto u = t;
      u[slot] = pre.index;
      out.emplace_back(u, pre.coeff);
    }
  return out;
}

inline void require_valid_key(const BasisIndex &b, const AlgebraParams &p) { require_valid(b, p); }
template <std::size_t R> void require_valid_key(const std::array<BasisIndex, R> &t, const AlgebraParams &p) {
  for (const auto &b : t) require_valid(b, p);
}

/// A derivation stored extensionally on a window: generator -> value.
/// Missing generators map to zero. `degree` is empty for a mixed-degree rule.
template <class V> struct DerivationTable {
  static constexpr Target target = target_of<V>();

  Window window;
  std::optional<HalfInt> degree;
  std::map<BasisIndex, V> values;

  const V &at(const BasisIndex &g) const {
    static const V zero;
    auto it = values.find(g);
    return it == values.end() ? zero : it->second;
  }

  void set(const BasisIndex &g, V v) {
    if (v.is_zero()) {
      values.erase(g);
    } else {
      values[g] = std::move(v);
    }
  }

  friend bool operator==(const DerivationTable &a, const DerivationTable &b) {
    return a.window == b.window && a.degree == b.degree && a.values == b.values;
  }
};

using AlgebraDerivation = DerivationTable<Element>;
using TensorDerivation = DerivationTable<Tensor2>;

template <class V> struct NamedDerivation {
  std::string name;
  DerivationTable<V> table;
};

template <class Key> struct DerivationViolation {
  BasisIndex x;
  BasisIndex y;
  Key component;
  Rational residual; // coefficient of D([x,y]) - x.D(y) + y.D(x)
};

template <class Key> struct DerivationReport {
  std::size_t pairs_checked = 0;
  std::size_t pairs_skipped = 0;
  std::vector<DerivationViolation<Key>> violations;

  bool passed() const { return violations.empty(); }
};

/// Checks D([x,y]) = x.D(y) - y.D(x) on generator pairs of the window.
///
/// Values are read only inside the window. A pair is skipped when [x,y]
/// leaves the window; a component of the identity is compared only when every
/// value it depends on lies inside the window, so truncation never produces a
/// false violation.
template <class V> DerivationReport<typename V::key_type> is_derivation(const DerivationTable<V> &d,
                                                                        const AlgebraParams &p) {
  using Key = typename V::key_type;
  const Window &w = d.window;
  DerivationReport<Key> report;
  const auto gens = generators_in(w, p);
  std::map<BasisIndex, V> vals;
  for (const auto &[g, v] : d.values) {
    require_valid(g, p);
    for (const auto &[k, c] : v) require_valid_key(k, p);
    if (w.contains(g)) vals[g] = truncate(v, w);
  }
  auto value = [&](const BasisIndex &g) -> const V & {
    static const V zero;
    auto it = vals.find(g);
    return it == vals.end() ? zero : it->second;
  };
  auto exact = [&](const BasisIndex &g, const Key &t) {
    for (const auto &[u, c] : key_preimages(g, t, p))
      if (!w.contains(u)) return false;
    return true;
  };
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      const auto &x = gens[i], &y = gens[j];
      BasisBracket br = bracket_basis_unchecked(x, y, p);
      bool inside = true;
      for (const auto &t : br) inside = inside && w.contains(t.index);
      if (!inside) {
        ++report.pairs_skipped;
        continue;
      }
      ++report.pairs_checked;
      V diff;
      for (const auto &t : br) diff.add(value(t.index), t.coeff);
      diff -= act(x, value(y), p);
      diff += act(y, value(x), p);
      for (const auto &[k, c] : diff) {
        if (!w.contains(k) || !exact(x, k) || !exact(y, k)) continue;
        report.violations.push_back({x, y, k, c});
      }
    }
  return report;
}

/// v_inn : x -> x . v, tabulated on the window (values truncated to it).
template <class V> DerivationTable<V> inner(const V &v, const AlgebraParams &p, const Window &w) {
  for (const auto &[k, c] : v) require_valid_key(k, p);
  DegreeInfo deg = degree_of(v);
  if (deg.status == DegreeInfo::Status::Inhomogeneous)
    throw std::invalid_argument("inner derivation needs a homogeneous element");
  DerivationTable<V> d;
  d.window = w;
  d.degree = deg.homogeneous() ? deg.degree : HalfInt{0};
  for (const auto &g : generators_in(w, p)) d.set(g, truncate(act(g, v, p), w));
  return d;
}

/// Degree-alpha part: the value at a degree-q generator keeps only its
/// degree q+alpha components.
template <class V> DerivationTable<V> homogeneous_component(const DerivationTable<V> &d, HalfInt alpha) {
  DerivationTable<V> out;
  out.window = d.window;
  out.degree = alpha;
  for (const auto &[g, v] : d.values) {
    const int want = g.dd + alpha.twice;
    out.set(g, v.filtered([&](const auto &k) { return total_dd(k) == want; }));
  }
  return out;
}

/// Degrees alpha for which the degree-alpha component is nonzero.
template <class V> std::set<HalfInt> support_degrees(const DerivationTable<V> &d) {
  std::set<HalfInt> out;
  for (const auto &[g, v] : d.values)
    for (const auto &[k, c] : v) out.insert(HalfInt{total_dd(k) - g.dd});
  return out;
}

template <class V> DerivationTable<V> operator+(const DerivationTable<V> &a, const DerivationTable<V> &b) {
  DerivationTable<V> out;
  out.window = a.window;
  out.degree = a.degree == b.degree ? a.degree : std::nullopt;
  out.values = a.values;
  for (const auto &[g, v] : b.values) out.set(g, out.at(g) + v);
  return out;
}

} // namespace svlie
