#pragma once

#include "svlie/algebra.hpp"

#include <optional>
#include <vector>

namespace svlie {

inline Tensor2 tensor(const Element &a, const Element &b) {
  Tensor2 out;
  for (const auto &[x, cx] : a)
    for (const auto &[y, cy] : b) out.add({x, y}, cx * cy);
  return out;
}

inline Tensor3 tensor(const Element &a, const Element &b, const Element &c) {
  Tensor3 out;
  for (const auto &[x, cx] : a)
    for (const auto &[y, cy] : b)
      for (const auto &[z, cz] : c) out.add({x, y, z}, cx * cy * cz);
  return out;
}

inline Tensor2 twist(const Tensor2 &t) {
  Tensor2 out;
  for (const auto &[k, c] : t) out.add({k[1], k[0]}, c);
  return out;
}

/// x1 (x) x2 (x) x3 -> x2 (x) x3 (x) x1
inline Tensor3 cyclic(const Tensor3 &t) {
  Tensor3 out;
  for (const auto &[k, c] : t) out.add({k[1], k[2], k[0]}, c);
  return out;
}

/// r lies in Im(1 - tau) exactly when it is skew.
inline bool is_skew(const Tensor2 &t) { return twist(t) == -t; }
inline bool skew_part_membership(const Tensor2 &t) { return is_skew(t); }

/// Diagonal adjoint action of a basis vector on one basis key (any rank):
/// the Leibniz sum over slots.
template <std::size_t R, class Out>
void act_on_key(const BasisIndex &g, const std::array<BasisIndex, R> &key, const Rational &scale,
                const AlgebraParams &p, Out &out) {
  for (std::size_t slot = 0; slot < R; ++slot)
    for (const auto &t : bracket_basis_unchecked(g, key[slot], p)) {
      auto k = key;
      k[slot] = t.index;
      out.add(k, scale * t.coeff);
    }
}

template <std::size_t R>
LinearCombination<std::array<BasisIndex, R>> diag_action_n(const Element &x,
                                                           const LinearCombination<std::array<BasisIndex, R>> &t,
                                                           const AlgebraParams &p) {
  for (const auto &[g, c] : x) require_valid(g, p);
  for (const auto &[k, c] : t)
    for (const auto &b : k) require_valid(b, p);
  LinearCombination<std::array<BasisIndex, R>> out;
  for (const auto &[g, cg] : x)
    for (const auto &[k, ck] : t) act_on_key(g, k, cg * ck, p, out);
  return out;
}

inline Tensor2 diag_action(const Element &x, const Tensor2 &t, const AlgebraParams &p) {
  return diag_action_n<2>(x, t, p);
}

inline Tensor3 diag_action3(const Element &x, const Tensor3 &t, const AlgebraParams &p) {
  return diag_action_n<3>(x, t, p);
}

/// Candidate cobracket Delta_r(x) = x . r.
inline Tensor2 coboundary(const Tensor2 &r, const Element &x, const AlgebraParams &p) { return diag_action(x, r, p); }

/// c(r) = [r12,r13] + [r12,r23] + [r13,r23], expanded into L^{(x)3}.
inline Tensor3 ybe_c(const Tensor2 &r, const AlgebraParams &p) {
  for (const auto &[k, c] : r)
    for (const auto &b : k) require_valid(b, p);
  Tensor3 out;
  for (const auto &[ki, ci] : r)
    for (const auto &[kj, cj] : r) {
      const auto &ai = ki[0], &bi = ki[1], &aj = kj[0], &bj = kj[1];
      const Rational c = ci * cj;
      for (const auto &t : bracket_basis_unchecked(ai, aj, p)) out.add({t.index, bi, bj}, c * t.coeff);
      for (const auto &t : bracket_basis_unchecked(bi, aj, p)) out.add({ai, t.index, bj}, c * t.coeff);
      for (const auto &t : bracket_basis_unchecked(bi, bj, p)) out.add({ai, aj, t.index}, c * t.coeff);
    }
  return out;
}

inline bool check_cybe(const Tensor2 &r, const AlgebraParams &p) { return ybe_c(r, p).is_zero(); }

struct MybeReport {
  bool satisfied = true;
  std::optional<BasisIndex> witness; // a generator that moves c(r)
};

inline MybeReport check_mybe_report(const Tensor2 &r, const AlgebraParams &p, const Window &w) {
  const Tensor3 cr = ybe_c(r, p);
  for (const auto &g : generators_in(w, p))
    if (!diag_action3(element(g), cr, p).is_zero()) return {false, g};
  return {};
}

inline bool check_mybe(const Tensor2 &r, const AlgebraParams &p, const Window &w) {
  return check_mybe_report(r, p, w).satisfied;
}

/// Left side (1 + xi + xi^2)(1 (x) Delta_r) Delta_r(x).
inline Tensor3 cojacobi_lhs(const Tensor2 &r, const Element &x, const AlgebraParams &p) {
  Tensor3 inner;
  for (const auto &[k, c] : coboundary(r, x, p)) {
    Tensor2 d = coboundary(r, element(k[1]), p);
    for (const auto &[kd, cd] : d) inner.add({k[0], kd[0], kd[1]}, c * cd);
  }
  Tensor3 once = cyclic(inner);
  return inner + once + cyclic(once);
}

inline Tensor3 cojacobi_rhs(const Tensor2 &r, const Element &x, const AlgebraParams &p) {
  return diag_action3(x, ybe_c(r, p), p);
}

inline bool check_cojacobi_identity(const Tensor2 &r, const Element &x, const AlgebraParams &p) {
  return cojacobi_lhs(r, x, p) == cojacobi_rhs(r, x, p);
}

/// Delta_r([x,y]) = x . Delta_r(y) - y . Delta_r(x).
inline bool check_compatibility(const Tensor2 &r, const Element &x, const Element &y, const AlgebraParams &p) {
  Tensor2 lhs = coboundary(r, bracket(x, y, p), p);
  Tensor2 rhs = diag_action(x, coboundary(r, y, p), p) - diag_action(y, coboundary(r, x, p), p);
  return lhs == rhs;
}

} // namespace svlie
