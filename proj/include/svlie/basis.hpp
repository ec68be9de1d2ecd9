#pragma once

#include "svlie/rational.hpp"

#include <array>
#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace svlie {

/// Raised when a generator tag violates the parity rules of the chosen algebra.
class InvalidIndex : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a catalog request does not match the (s, lambda) case row.
class CaseError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Declaration order is the canonical order L < M < Y < C.
enum class Kind : int { L = 0, M = 1, Y = 2, C = 3 };

inline char kind_char(Kind k) {
  switch (k) {
  case Kind::L: return 'L';
  case Kind::M: return 'M';
  case Kind::Y: return 'Y';
  case Kind::C: return 'c';
  }
  return '?';
}

/// Generator tag with doubled degree, so Y_{1/2} is {Y, 1}.
struct BasisIndex {
  Kind kind = Kind::L;
  int dd = 0;

  HalfInt degree() const { return HalfInt{dd}; }
  friend constexpr auto operator<=>(const BasisIndex &, const BasisIndex &) = default;
};

inline BasisIndex L(int n) { return {Kind::L, 2 * n}; }
inline BasisIndex M(int n) { return {Kind::M, 2 * n}; }
/// Y with doubled degree, e.g. Ydd(1) is Y_{1/2}.
inline BasisIndex Ydd(int dd) { return {Kind::Y, dd}; }
inline BasisIndex central() { return {Kind::C, 0}; }

inline std::string to_string(const BasisIndex &b) {
  switch (b.kind) {
  case Kind::C: return "c";
  case Kind::Y: return "Y[" + to_string(HalfInt{b.dd}) + "]";
  default: return std::string(1, kind_char(b.kind)) + "[" + std::to_string(b.dd / 2) + "]";
  }
}

using IndexPair = std::array<BasisIndex, 2>;
using IndexTriple = std::array<BasisIndex, 3>;

/// Symmetric-or-not interval of doubled degrees, lo <= 0 <= hi.
struct Window {
  int lo = 0;
  int hi = 0;

  static Window symmetric(int n) { return {-n, n}; }

  bool contains(int dd) const { return lo <= dd && dd <= hi; }
  bool contains(const BasisIndex &b) const { return contains(b.dd); }
  template <std::size_t R> bool contains(const std::array<BasisIndex, R> &t) const {
    for (const auto &b : t)
      if (!contains(b)) return false;
    return true;
  }
  /// The inner half window used for interior restriction.
  Window interior() const { return {lo / 2, hi / 2}; }

  friend constexpr bool operator==(const Window &, const Window &) = default;
};

/// Selects one algebra L^s_lambda from the family, with or without c.
struct AlgebraParams {
  HalfInt s{0};
  Rational lambda{0};
  bool central = true;

  AlgebraParams() = default;
  AlgebraParams(HalfInt s_, Rational lambda_, bool central_ = true)
      : s(s_), lambda(std::move(lambda_)), central(central_) {
    if (s.twice != 0 && s.twice != 1) throw std::invalid_argument("s must be 0 or 1/2");
  }

  bool twisted() const { return s.twice == 0; }

  friend bool operator==(const AlgebraParams &a, const AlgebraParams &b) {
    return a.s == b.s && a.lambda == b.lambda && a.central == b.central;
  }
};

inline AlgebraParams make_params(int s_twice, const Rational &lambda, bool central = true) {
  return AlgebraParams(HalfInt{s_twice}, lambda, central);
}

inline std::string describe(const AlgebraParams &p) {
  return "s=" + to_string(p.s) + " lambda=" + to_string(p.lambda) +
         (p.central ? " central" : " centerless");
}

inline bool valid_index(const BasisIndex &b, const AlgebraParams &p) {
  switch (b.kind) {
  case Kind::L:
  case Kind::M: return b.dd % 2 == 0;
  case Kind::Y: return ((b.dd - p.s.twice) % 2 + 2) % 2 == 0;
  case Kind::C: return b.dd == 0;
  }
  return false;
}

inline void require_valid(const BasisIndex &b, const AlgebraParams &p) {
  if (!valid_index(b, p))
    throw InvalidIndex("index " + to_string(b) + " violates parity for s=" + to_string(p.s));
}

/// Every basis vector of L^s_lambda whose doubled degree lies in [lo, hi].
/// c is included only when the algebra is central.
inline std::vector<BasisIndex> generators_in(const Window &w, const AlgebraParams &p) {
  std::vector<BasisIndex> out;
  for (Kind k : {Kind::L, Kind::M, Kind::Y})
    for (int dd = w.lo; dd <= w.hi; ++dd) {
      BasisIndex b{k, dd};
      if (valid_index(b, p)) out.push_back(b);
    }
  if (p.central && w.contains(0)) out.push_back(central());
  return out;
}

/// Basis vectors at one doubled degree (no window test).
inline std::vector<BasisIndex> generators_at(int dd, const AlgebraParams &p) {
  std::vector<BasisIndex> out;
  for (Kind k : {Kind::L, Kind::M, Kind::Y}) {
    BasisIndex b{k, dd};
    if (valid_index(b, p)) out.push_back(b);
  }
  if (p.central && dd == 0) out.push_back(central());
  return out;
}

} // namespace svlie
