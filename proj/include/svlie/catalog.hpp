#pragma once

// Closed-form outer derivations of L^s_lambda with values in L and L (x) L.
//
// Every family is a list of terms "param * w(n) * (source_n -> image_n)".
// The tensor-valued version of a family places a center leg on the left for
// the plain parameter and on the right for its daggered twin:
//   param * w(n) * leg (x) image_n  +  param_dag * w(n) * image_n (x) leg_dag.

#include "svlie/derivation.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <vector>

namespace svlie {

enum class Param { Alpha, Beta, Mu, Nu, Gamma, Zeta };
enum class Leg { Z, W, V };

inline std::string param_name(Param p) {
  switch (p) {
  case Param::Alpha: return "alpha";
  case Param::Beta: return "beta";
  case Param::Mu: return "mu";
  case Param::Nu: return "nu";
  case Param::Gamma: return "gamma";
  case Param::Zeta: return "zeta";
  }
  return "?";
}

inline char leg_name(Leg l) {
  switch (l) {
  case Leg::Z: return 'z';
  case Leg::W: return 'w';
  case Leg::V: return 'v';
  }
  return '?';
}

/// Polynomial in the integer label n of the source generator (L_n, M_n, Y_{s+n}).
struct Weight {
  std::array<Rational, 4> coeffs{}; // c0 + c1 n + c2 n^2 + c3 n^3

  Rational operator()(const Rational &n) const {
    return coeffs[0] + n * (coeffs[1] + n * (coeffs[2] + n * coeffs[3]));
  }
};

inline Weight constant(int c) { return {{Rational(c), 0, 0, 0}}; }
inline Weight linear() { return {{0, 1, 0, 0}}; }
inline Weight square() { return {{0, 0, 1, 0}}; }
inline Weight square_minus_linear() { return {{0, -1, 1, 0}}; }
inline Weight cube() { return {{0, 0, 0, 1}}; }

struct FamilyTerm {
  Param param;
  Kind source;
  Kind image;
  Weight weight;
  Leg leg;
};

struct Family {
  std::string name;
  std::vector<FamilyTerm> terms;

  std::vector<Param> params() const {
    std::vector<Param> out;
    for (const auto &t : terms)
      if (std::find(out.begin(), out.end(), t.param) == out.end()) out.push_back(t.param);
    return out;
  }
  Leg leg_of(Param p) const {
    for (const auto &t : terms)
      if (t.param == p) return t.leg;
    return Leg::Z;
  }
};

/// Scalars and center legs for a catalog request. Unset scalars are zero.
struct CatalogParams {
  Rational alpha, alpha_dag, beta, beta_dag, mu, mu_dag, nu, nu_dag, gamma, gamma_dag, zeta, zeta_dag;
  Element z, z_dag, w, w_dag, v, v_dag;

  Rational &scalar(Param p, bool dag) {
    switch (p) {
    case Param::Alpha: return dag ? alpha_dag : alpha;
    case Param::Beta: return dag ? beta_dag : beta;
    case Param::Mu: return dag ? mu_dag : mu;
    case Param::Nu: return dag ? nu_dag : nu;
    case Param::Gamma: return dag ? gamma_dag : gamma;
    case Param::Zeta: return dag ? zeta_dag : zeta;
    }
    return alpha;
  }
  const Rational &scalar(Param p, bool dag) const { return const_cast<CatalogParams *>(this)->scalar(p, dag); }

  Element &leg(Leg l, bool dag) {
    switch (l) {
    case Leg::Z: return dag ? z_dag : z;
    case Leg::W: return dag ? w_dag : w;
    case Leg::V: return dag ? v_dag : v;
    }
    return z;
  }
  const Element &leg(Leg l, bool dag) const { return const_cast<CatalogParams *>(this)->leg(l, dag); }
};

namespace detail {

inline FamilyTerm term(Param p, Kind src, Kind img, Weight w, Leg leg) { return {p, src, img, w, leg}; }

// The grading derivation Y -> Y, M -> 2M under a given parameter.
inline std::vector<FamilyTerm> scaling(Param p) {
  return {term(p, Kind::Y, Kind::Y, constant(1), Leg::W), term(p, Kind::M, Kind::M, constant(2), Leg::W)};
}

inline Family make(std::string name, std::vector<std::vector<FamilyTerm>> groups) {
  Family f{std::move(name), {}};
  for (auto &g : groups) f.terms.insert(f.terms.end(), g.begin(), g.end());
  return f;
}

} // namespace detail

/// Which case row of the H^1 tables a parameter pair falls in.
enum class CaseRow {
  Orig0,        // s = 1/2, lambda = 0 (values in L only)
  OrigMinus1,   // s = 1/2, lambda = -1
  OrigMinus2,   // s = 1/2, lambda = -2
  OrigGeneric,  // s = 1/2, lambda not in {0, -1, -2}
  Twist0,       // s = 0, lambda = 0
  TwistMinus1,  // s = 0, lambda = -1
  TwistMinus2,  // s = 0, lambda = -2
  TwistPlus1,   // s = 0, lambda = 1
  TwistGeneric, // s = 0, lambda not in {0, 1, -1, -2, -3}
  Deferred,     // s = 0, lambda = -3
};

inline CaseRow case_row(const AlgebraParams &p) {
  const Rational &l = p.lambda;
  if (!p.twisted()) {
    if (l == 0) return CaseRow::Orig0;
    if (l == -1) return CaseRow::OrigMinus1;
    if (l == -2) return CaseRow::OrigMinus2;
    return CaseRow::OrigGeneric;
  }
  if (l == 0) return CaseRow::Twist0;
  if (l == -1) return CaseRow::TwistMinus1;
  if (l == -2) return CaseRow::TwistMinus2;
  if (l == 1) return CaseRow::TwistPlus1;
  if (l == -3) return CaseRow::Deferred;
  return CaseRow::TwistGeneric;
}

/// Parameterised family sigma_i / rho_i for the case row of p.
inline Family family_for(const AlgebraParams &p) {
  using detail::make;
  using detail::scaling;
  using detail::term;
  switch (case_row(p)) {
  case CaseRow::Orig0:
    return make("D_1+D_2^0+D_3^0", {scaling(Param::Beta), {term(Param::Nu, Kind::L, Kind::M, constant(1), Leg::Z)},
                                    {term(Param::Mu, Kind::L, Kind::M, linear(), Leg::Z)}});
  case CaseRow::OrigMinus1:
    return make("sigma_1", {{term(Param::Alpha, Kind::L, Kind::M, square_minus_linear(), Leg::Z)}, scaling(Param::Beta)});
  case CaseRow::OrigMinus2:
    return make("sigma_2", {{term(Param::Alpha, Kind::L, Kind::M, cube(), Leg::Z)}, scaling(Param::Beta)});
  case CaseRow::OrigGeneric: return make("sigma_3", {scaling(Param::Beta)});
  case CaseRow::Twist0:
    return make("rho_1", {{term(Param::Mu, Kind::L, Kind::M, linear(), Leg::Z)},
                          {term(Param::Nu, Kind::L, Kind::M, constant(1), Leg::Z)},
                          scaling(Param::Gamma)});
  case CaseRow::TwistMinus1:
    return make("rho_2", {{term(Param::Mu, Kind::L, Kind::M, square(), Leg::Z)},
                          scaling(Param::Gamma),
                          {term(Param::Zeta, Kind::Y, Kind::M, linear(), Leg::V)}});
  case CaseRow::TwistMinus2:
    return make("rho_3", {{term(Param::Mu, Kind::L, Kind::M, cube(), Leg::Z)}, scaling(Param::Gamma)});
  case CaseRow::TwistPlus1:
    return make("rho_4", {scaling(Param::Gamma), {term(Param::Zeta, Kind::Y, Kind::M, constant(1), Leg::V)}});
  case CaseRow::TwistGeneric: return make("rho_5", {scaling(Param::Gamma)});
  case CaseRow::Deferred: break;
  }
  throw CaseError("deferred case: s=0, lambda=-3 is not covered by the catalog");
}

/// Named single derivations D_i^lambda (s = 1/2) and d_i^lambda (s = 0).
/// Building one does not check lambda, so they double as mismatch controls.
inline Family named_family(const std::string &name) {
  using detail::term;
  const std::string base = name.substr(1);
  auto one = [&](std::vector<FamilyTerm> t) { return Family{name, std::move(t)}; };
  if (name == "D_1" || name == "d_1") return one(detail::scaling(Param::Beta));
  if (base == "_2^0") return one({term(Param::Beta, Kind::L, Kind::M, constant(1), Leg::Z)});
  if (base == "_3^0") return one({term(Param::Beta, Kind::L, Kind::M, linear(), Leg::Z)});
  if (name == "D_2^-1") return one({term(Param::Beta, Kind::L, Kind::M, square_minus_linear(), Leg::Z)});
  if (name == "d_2^-1") return one({term(Param::Beta, Kind::L, Kind::M, square(), Leg::Z)});
  if (name == "d_3^-1") return one({term(Param::Beta, Kind::Y, Kind::M, linear(), Leg::Z)});
  if (base == "_2^-2") return one({term(Param::Beta, Kind::L, Kind::M, cube(), Leg::Z)});
  if (name == "d_2^1") return one({term(Param::Beta, Kind::Y, Kind::M, constant(1), Leg::Z)});
  throw std::invalid_argument("unknown derivation name: " + name);
}

/// The named basis of H^1(L, L) for the case row of p.
inline std::vector<std::string> named_basis(const AlgebraParams &p) {
  switch (case_row(p)) {
  case CaseRow::Orig0: return {"D_1", "D_2^0", "D_3^0"};
  case CaseRow::OrigMinus1: return {"D_1", "D_2^-1"};
  case CaseRow::OrigMinus2: return {"D_1", "D_2^-2"};
  case CaseRow::OrigGeneric: return {"D_1"};
  case CaseRow::Twist0: return {"d_1", "d_2^0", "d_3^0"};
  case CaseRow::TwistMinus1: return {"d_1", "d_2^-1", "d_3^-1"};
  case CaseRow::TwistMinus2: return {"d_1", "d_2^-2"};
  case CaseRow::TwistPlus1: return {"d_1", "d_2^1"};
  case CaseRow::TwistGeneric: return {"d_1"};
  case CaseRow::Deferred: break;
  }
  throw CaseError("deferred case: s=0, lambda=-3 is not covered by the catalog");
}

inline Rational label_n(const BasisIndex &g, const AlgebraParams &p) {
  return g.kind == Kind::Y ? ratio(g.dd - p.s.twice, 2) : ratio(g.dd, 2);
}

/// Values in L: sum over terms of param * w(n) * image_n.
inline AlgebraDerivation build_algebra(const Family &f, const CatalogParams &c, const AlgebraParams &p,
                                       const Window &w) {
  AlgebraDerivation d;
  d.window = w;
  d.degree = HalfInt{0};
  for (const auto &g : generators_in(w, p)) {
    Element v;
    for (const auto &t : f.terms) {
      if (t.source != g.kind) continue;
      v.add(BasisIndex{t.image, g.dd}, c.scalar(t.param, false) * t.weight(label_n(g, p)));
    }
    d.set(g, std::move(v));
  }
  return d;
}

/// Values in L (x) L with center legs.
inline TensorDerivation build_tensor(const Family &f, const CatalogParams &c, const AlgebraParams &p,
                                     const Window &w) {
  TensorDerivation d;
  d.window = w;
  d.degree = HalfInt{0};
  for (const auto &g : generators_in(w, p)) {
    Tensor2 v;
    for (const auto &t : f.terms) {
      if (t.source != g.kind) continue;
      const Rational wt = t.weight(label_n(g, p));
      const Element img = element(BasisIndex{t.image, g.dd});
      v.add(tensor(c.leg(t.leg, false), img), c.scalar(t.param, false) * wt);
      v.add(tensor(img, c.leg(t.leg, true)), c.scalar(t.param, true) * wt);
    }
    d.set(g, std::move(v));
  }
  return d;
}

inline void require_center_legs(const CatalogParams &c, const std::vector<Element> &center) {
  for (Leg l : {Leg::Z, Leg::W, Leg::V})
    for (bool dag : {false, true})
      if (!in_span(c.leg(l, dag), center))
        throw CaseError(std::string("center leg ") + leg_name(l) + (dag ? "_dag" : "") + " is not central");
}

/// Catalog constructor: the case-appropriate family evaluated at the given
/// parameters. Tensor targets need legs inside the center of the window.
template <class V>
std::vector<NamedDerivation<V>> catalog(const AlgebraParams &p, const CatalogParams &c, const Window &w) {
  Family f = family_for(p);
  if constexpr (target_of<V>() == Target::Algebra) {
    return {{f.name, build_algebra(f, c, p, w)}};
  } else {
    if (case_row(p) == CaseRow::Orig0)
      throw CaseError("deferred case: s=1/2, lambda=0 has no tensor-valued catalog entry");
    require_center_legs(c, center_in_window(p, w));
    return {{f.name + "^natural", build_tensor(f, c, p, w)}};
  }
}

/// A named derivation (no lambda check) with unit coefficient.
inline AlgebraDerivation lemma_derivation(const std::string &name, const AlgebraParams &p, const Window &w) {
  CatalogParams c;
  c.beta = 1;
  return build_algebra(named_family(name), c, p, w);
}

/// One table per free scalar (values in L), or per free scalar and center
/// basis leg (values in L (x) L). The length of this list is the expected
/// dimension of H^1 in degree 0.
template <class V>
std::vector<NamedDerivation<V>> catalog_parameter_basis(const AlgebraParams &p, const Window &w) {
  Family f = family_for(p);
  std::vector<NamedDerivation<V>> out;
  if constexpr (target_of<V>() == Target::Algebra) {
    for (Param prm : f.params()) {
      CatalogParams c;
      c.scalar(prm, false) = 1;
      out.push_back({f.name + ":" + param_name(prm), build_algebra(f, c, p, w)});
    }
  } else {
    if (case_row(p) == CaseRow::Orig0)
      throw CaseError("deferred case: s=1/2, lambda=0 has no tensor-valued catalog entry");
    const auto center = center_in_window(p, w);
    for (Param prm : f.params())
      for (bool dag : {false, true})
        for (std::size_t j = 0; j < center.size(); ++j) {
          CatalogParams c;
          c.scalar(prm, dag) = 1;
          c.leg(f.leg_of(prm), dag) = center[j];
          out.push_back({f.name + "^natural:" + param_name(prm) + (dag ? "_dag" : "") + "@" + std::to_string(j),
                         build_tensor(f, c, p, w)});
        }
  }
  return out;
}

} // namespace svlie
