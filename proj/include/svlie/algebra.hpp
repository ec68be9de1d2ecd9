#pragma once

#include "svlie/linear_combination.hpp"
#include "svlie/sparse_linalg.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace svlie {

struct BracketTerm {
  BasisIndex index;
  Rational coeff;
};

/// Result of bracketing two basis vectors: at most L_{m+n} plus a c term.
struct BasisBracket {
  std::array<BracketTerm, 2> terms{};
  int count = 0;

  void push(const BasisIndex &b, Rational c) {
    if (c != 0) terms[count++] = {b, std::move(c)};
  }
  const BracketTerm *begin() const { return terms.data(); }
  const BracketTerm *end() const { return terms.data() + count; }
  bool empty() const { return count == 0; }
};

/// Structure constants of L^s_lambda. Indices are assumed valid for p.
inline BasisBracket bracket_basis_unchecked(const BasisIndex &a, const BasisIndex &b, const AlgebraParams &p) {
  BasisBracket out;
  if (a.kind == Kind::C || b.kind == Kind::C) return out;
  if (a.kind != Kind::L && b.kind == Kind::L) {
    out = bracket_basis_unchecked(b, a, p);
    for (int i = 0; i < out.count; ++i) out.terms[i].coeff = -out.terms[i].coeff;
    return out;
  }
  const Rational n = ratio(a.dd, 2);
  const Rational m = ratio(b.dd, 2);
  const int sum = a.dd + b.dd;
  if (a.kind == Kind::L) {
    switch (b.kind) {
    case Kind::L:
      out.push({Kind::L, sum}, m - n);
      if (sum == 0 && p.central) out.push(central(), (m * m * m - m) / 12);
      break;
    case Kind::M: out.push({Kind::M, sum}, m - p.lambda * n); break;
    case Kind::Y: out.push({Kind::Y, sum}, m - (p.lambda + 1) / 2 * n); break;
    default: break;
    }
    return out;
  }
  if (a.kind == Kind::Y && b.kind == Kind::Y) out.push({Kind::M, sum}, m - n);
  return out;
}

inline BasisBracket bracket_basis(const BasisIndex &a, const BasisIndex &b, const AlgebraParams &p) {
  require_valid(a, p);
  require_valid(b, p);
  return bracket_basis_unchecked(a, b, p);
}

/// Bilinear extension of a basis-level bracket.
template <class BasisBracketFn>
Element bracket_with(BasisBracketFn &&fn, const Element &x, const Element &y) {
  Element out;
  for (const auto &[a, ca] : x)
    for (const auto &[b, cb] : y)
      for (const auto &t : fn(a, b)) out.add(t.index, ca * cb * t.coeff);
  return out;
}

inline Element bracket(const Element &x, const Element &y, const AlgebraParams &p) {
  for (const auto &[a, c] : x) require_valid(a, p);
  for (const auto &[b, c] : y) require_valid(b, p);
  return bracket_with([&](const BasisIndex &a, const BasisIndex &b) { return bracket_basis_unchecked(a, b, p); }, x,
                      y);
}

/// Every basis vector a (of any degree) with [g, a] having a nonzero
/// coefficient on `target`, together with that coefficient.
inline std::vector<BracketTerm> ad_preimages(const BasisIndex &g, const BasisIndex &target, const AlgebraParams &p) {
  std::vector<BracketTerm> out;
  if (g.kind == Kind::C) return out;
  int dd = target.dd - g.dd;
  for (Kind k : {Kind::L, Kind::M, Kind::Y}) {
    BasisIndex a{k, dd};
    if (!valid_index(a, p)) continue;
    for (const auto &t : bracket_basis_unchecked(g, a, p))
      if (t.index == target) out.push_back({a, t.coeff});
  }
  return out;
}

struct JacobiViolation {
  std::array<BasisIndex, 3> triple;
  Element value;
};

struct JacobiReport {
  std::size_t triples_checked = 0;
  std::vector<JacobiViolation> violations;

  bool passed() const { return violations.empty(); }
};

/// Checks [[x,y],z] + [[y,z],x] + [[z,x],y] = 0 on generator triples whose
/// pairwise and total degrees stay in the window. The bracket is injectable so
/// that a deliberately broken table can be used as a negative control.
template <class BasisBracketFn>
JacobiReport check_jacobi_with(const AlgebraParams &p, const Window &w, BasisBracketFn &&fn) {
  JacobiReport report;
  const auto gens = generators_in(w, p);
  auto br = [&](const Element &x, const Element &y) { return bracket_with(fn, x, y); };
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i; j < gens.size(); ++j)
      for (std::size_t k = j; k < gens.size(); ++k) {
        const auto &a = gens[i], &b = gens[j], &c = gens[k];
        if (!w.contains(a.dd + b.dd) || !w.contains(b.dd + c.dd) || !w.contains(a.dd + c.dd) ||
            !w.contains(a.dd + b.dd + c.dd))
          continue;
        ++report.triples_checked;
        Element x = element(a), y = element(b), z = element(c);
        Element j3 = br(br(x, y), z) + br(br(y, z), x) + br(br(z, x), y);
        if (!j3.is_zero()) report.violations.push_back({{a, b, c}, j3});
      }
  return report;
}

inline JacobiReport check_jacobi(const AlgebraParams &p, const Window &w) {
  return check_jacobi_with(p, w, [&](const BasisIndex &a, const BasisIndex &b) {
    return bracket_basis_unchecked(a, b, p);
  });
}

/// Basis (in reduced echelon form) of the window-supported elements that
/// commute with every generator of the window.
inline std::vector<Element> center_in_window(const AlgebraParams &p, const Window &w) {
  const auto gens = generators_in(w, p);
  std::map<BasisIndex, std::size_t> col;
  for (std::size_t i = 0; i < gens.size(); ++i) col[gens[i]] = i;
  // Equation rows: coefficient of each output basis vector of [g, v].
  std::map<std::pair<BasisIndex, BasisIndex>, linalg::RowBuilder> rows;
  for (const auto &g : gens)
    for (const auto &v : gens)
      for (const auto &t : bracket_basis_unchecked(g, v, p)) rows[{g, t.index}].add(col[v], t.coeff);
  linalg::Echelon ech(gens.size());
  for (auto &[key, b] : rows) ech.insert(b.finish());
  std::vector<Element> out;
  for (const auto &kv : ech.kernel_basis()) {
    Element e;
    for (const auto &[c, q] : kv) e.add(gens[c], q);
    out.push_back(e);
  }
  return out;
}

/// Membership of an element in the span of some other elements.
inline bool in_span(const Element &x, const std::vector<Element> &basis) {
  std::map<BasisIndex, std::size_t> col;
  auto index = [&](const BasisIndex &b) {
    auto [it, inserted] = col.try_emplace(b, col.size());
    return it->second;
  };
  std::vector<linalg::SparseVector> rows;
  auto to_row = [&](const Element &e) {
    linalg::RowBuilder rb;
    for (const auto &[b, q] : e) rb.add(index(b), q);
    return rb.finish();
  };
  for (const auto &e : basis) rows.push_back(to_row(e));
  auto xr = to_row(x);
  linalg::Echelon ech(col.size());
  for (const auto &r : rows) ech.insert(r);
  return ech.in_span(xr);
}

} // namespace svlie
