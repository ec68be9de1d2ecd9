#pragma once

#include "svlie/basis.hpp"

#include <initializer_list>
#include <map>
#include <utility>

namespace svlie {

/// Finitely supported map Key -> Rational, kept canonical (no zero entries).
template <class Key> class LinearCombination {
public:
  using key_type = Key;
  using Terms = std::map<Key, Rational>;

  LinearCombination() = default;
  explicit LinearCombination(const Key &k, Rational coeff = Rational(1)) { add(k, coeff); }
  LinearCombination(std::initializer_list<std::pair<Key, Rational>> terms) {
    for (const auto &[k, c] : terms) add(k, c);
  }

  void add(const Key &k, const Rational &coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(k, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void add(const LinearCombination &other, const Rational &scale = Rational(1)) {
    if (scale == 0) return;
    for (const auto &[k, c] : other.terms_) add(k, c * scale);
  }

  Rational coeff(const Key &k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms &terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  template <class Pred> LinearCombination filtered(Pred &&keep) const {
    LinearCombination out;
    for (const auto &[k, c] : terms_)
      if (keep(k)) out.terms_.emplace(k, c);
    return out;
  }

  LinearCombination &operator+=(const LinearCombination &o) {
    add(o);
    return *this;
  }
  LinearCombination &operator-=(const LinearCombination &o) {
    add(o, Rational(-1));
    return *this;
  }
  LinearCombination &operator*=(const Rational &s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto &[k, c] : terms_) c *= s;
    }
    return *this;
  }

  friend LinearCombination operator+(LinearCombination a, const LinearCombination &b) { return a += b; }
  friend LinearCombination operator-(LinearCombination a, const LinearCombination &b) { return a -= b; }
  friend LinearCombination operator-(LinearCombination a) { return a *= Rational(-1); }
  friend LinearCombination operator*(const Rational &s, LinearCombination a) { return a *= s; }
  friend LinearCombination operator*(LinearCombination a, const Rational &s) { return a *= s; }
  friend bool operator==(const LinearCombination &a, const LinearCombination &b) { return a.terms_ == b.terms_; }

private:
  Terms terms_;
};

using Element = LinearCombination<BasisIndex>;
using Tensor2 = LinearCombination<IndexPair>;
using Tensor3 = LinearCombination<IndexTriple>;

inline Element element(const BasisIndex &b, Rational c = Rational(1)) { return Element(b, std::move(c)); }

/// Sum of doubled degrees of all slots of a key.
inline int total_dd(const BasisIndex &b) { return b.dd; }
template <std::size_t R> int total_dd(const std::array<BasisIndex, R> &t) {
  int s = 0;
  for (const auto &b : t) s += b.dd;
  return s;
}

/// Degree of a linear combination: a value when homogeneous, `inhomogeneous`
/// when supports disagree, `any` for zero.
struct DegreeInfo {
  enum class Status { Homogeneous, Inhomogeneous, Any } status = Status::Any;
  HalfInt degree{};

  bool homogeneous() const { return status == Status::Homogeneous; }
};

template <class Key> DegreeInfo degree_of(const LinearCombination<Key> &x) {
  DegreeInfo info;
  for (const auto &[k, c] : x) {
    int dd = total_dd(k);
    if (info.status == DegreeInfo::Status::Any) {
      info = {DegreeInfo::Status::Homogeneous, HalfInt{dd}};
    } else if (info.degree.twice != dd) {
      return {DegreeInfo::Status::Inhomogeneous, {}};
    }
  }
  return info;
}

/// Part of x supported inside the window (all slots).
template <class Key> LinearCombination<Key> truncate(const LinearCombination<Key> &x, const Window &w) {
  return x.filtered([&](const Key &k) { return w.contains(k); });
}

} // namespace svlie
