#pragma once

// Exact sparse linear algebra over Q.
//
// Rows are cleared of denominators on entry and eliminated fraction-free:
// a row is reduced against the pivot row owning its leading column with
// r <- lead(p) * r - lead(r) * p, then divided by its content. The pivot
// column of every stored row is its lowest column, so the pivot order is the
// column order chosen by the caller.

#include "svlie/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

namespace svlie::linalg {

/// Sorted (column, value) pairs without zeros.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

/// Accumulates possibly repeated entries and emits a canonical SparseVector.
class RowBuilder {
public:
  void add(std::size_t col, const Rational &v) {
    if (v != 0) entries_.emplace_back(col, v);
  }
  SparseVector finish() {
    std::sort(entries_.begin(), entries_.end(),
              [](const auto &a, const auto &b) { return a.first < b.first; });
    SparseVector out;
    for (auto &[c, v] : entries_) {
      if (!out.empty() && out.back().first == c) {
        out.back().second += v;
        if (out.back().second == 0) out.pop_back();
      } else {
        out.emplace_back(c, std::move(v));
      }
    }
    entries_.clear();
    return out;
  }
  void clear() { entries_.clear(); }

private:
  std::vector<std::pair<std::size_t, Rational>> entries_;
};

struct IntRow {
  std::vector<std::size_t> cols;
  std::vector<Integer> vals;

  bool empty() const { return cols.empty(); }
};

inline IntRow to_int_row(const SparseVector &v) {
  IntRow r;
  Integer den = 1;
  for (const auto &[c, q] : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  r.cols.reserve(v.size());
  r.vals.reserve(v.size());
  for (const auto &[c, q] : v) {
    r.cols.push_back(c);
    r.vals.push_back(q.get_num() * (den / q.get_den()));
  }
  return r;
}

inline void make_primitive(IntRow &r) {
  if (r.empty()) return;
  Integer g = 0;
  for (const auto &x : r.vals) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  if (r.vals.front() < 0) g = -g;
  if (g != 1)
    for (auto &x : r.vals) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

/// r <- a*r - b*p, where a = lead(p), b = lead(r); cancels the leading entry.
inline void eliminate_lead(IntRow &r, const IntRow &p) {
  const Integer a = p.vals.front();
  const Integer b = r.vals.front();
  IntRow out;
  out.cols.reserve(r.cols.size() + p.cols.size());
  out.vals.reserve(r.cols.size() + p.cols.size());
  std::size_t i = 1, j = 1;
  Integer t;
  while (i < r.cols.size() || j < p.cols.size()) {
    if (j >= p.cols.size() || (i < r.cols.size() && r.cols[i] < p.cols[j])) {
      out.cols.push_back(r.cols[i]);
      out.vals.push_back(a * r.vals[i]);
      ++i;
    } else if (i >= r.cols.size() || p.cols[j] < r.cols[i]) {
      out.cols.push_back(p.cols[j]);
      out.vals.push_back(-b * p.vals[j]);
      ++j;
    } else {
      t = a * r.vals[i] - b * p.vals[j];
      if (t != 0) {
        out.cols.push_back(r.cols[i]);
        out.vals.push_back(t);
      }
      ++i;
      ++j;
    }
  }
  r = std::move(out);
  make_primitive(r);
}

/// Incremental row echelon form with one stored row per pivot column.
class Echelon {
public:
  explicit Echelon(std::size_t ncols) : pivot_of_(ncols, npos) {}

  std::size_t columns() const { return pivot_of_.size(); }
  std::size_t rank() const { return rows_.size(); }

  /// Reduces and stores the row. Returns true when the rank grew.
  bool insert(const SparseVector &v) { return insert(to_int_row(v)); }

  bool insert(IntRow r) {
    reduce(r);
    if (r.empty()) return false;
    make_primitive(r);
    pivot_of_[r.cols.front()] = rows_.size();
    rows_.push_back(std::move(r));
    return true;
  }

  bool in_span(const SparseVector &v) const {
    IntRow r = to_int_row(v);
    reduce(r);
    return r.empty();
  }

  bool is_pivot(std::size_t col) const { return pivot_of_[col] != npos; }

  std::vector<std::size_t> pivot_columns() const {
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < pivot_of_.size(); ++c)
      if (pivot_of_[c] != npos) out.push_back(c);
    return out;
  }

  std::size_t pivots_in(std::size_t begin, std::size_t end) const {
    std::size_t n = 0;
    for (std::size_t c = begin; c < end && c < pivot_of_.size(); ++c)
      if (pivot_of_[c] != npos) ++n;
    return n;
  }

  /// Basis of the null space, one vector per free column, from the reduced
  /// row echelon form. Intended for small systems.
  std::vector<SparseVector> kernel_basis() const {
    // Rational RREF, processed from the highest pivot down.
    std::vector<std::size_t> pcols = pivot_columns();
    std::vector<std::vector<std::pair<std::size_t, Rational>>> rref(pcols.size());
    std::vector<std::size_t> slot(pivot_of_.size(), npos);
    for (std::size_t k = 0; k < pcols.size(); ++k) {
      const IntRow &r = rows_[pivot_of_[pcols[k]]];
      Rational lead(r.vals.front());
      for (std::size_t i = 0; i < r.cols.size(); ++i) rref[k].emplace_back(r.cols[i], Rational(r.vals[i]) / lead);
      slot[pcols[k]] = k;
    }
    for (std::size_t kk = pcols.size(); kk-- > 0;) {
      // eliminate pivot column pcols[kk] from every earlier row
      const auto &prow = rref[kk];
      for (std::size_t k = 0; k < kk; ++k) {
        auto &row = rref[k];
        auto it = std::lower_bound(row.begin(), row.end(), pcols[kk],
                                   [](const auto &e, std::size_t c) { return e.first < c; });
        if (it == row.end() || it->first != pcols[kk]) continue;
        Rational f = it->second;
        RowBuilder b;
        for (const auto &[c, v] : row) b.add(c, v);
        for (const auto &[c, v] : prow) b.add(c, -f * v);
        row = b.finish();
      }
    }
    std::vector<SparseVector> out;
    for (std::size_t f = 0; f < pivot_of_.size(); ++f) {
      if (pivot_of_[f] != npos) continue;
      RowBuilder b;
      b.add(f, Rational(1));
      for (std::size_t k = 0; k < pcols.size(); ++k) {
        const auto &row = rref[k];
        auto it = std::lower_bound(row.begin(), row.end(), f,
                                   [](const auto &e, std::size_t c) { return e.first < c; });
        if (it != row.end() && it->first == f) b.add(pcols[k], -it->second);
      }
      out.push_back(b.finish());
    }
    return out;
  }

private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  void reduce(IntRow &r) const {
    while (!r.empty()) {
      std::size_t p = pivot_of_[r.cols.front()];
      if (p == npos) return;
      eliminate_lead(r, rows_[p]);
    }
  }

  std::vector<std::size_t> pivot_of_;
  std::vector<IntRow> rows_;
};

/// Rank of a set of vectors in a space of the given dimension.
inline std::size_t rank_of(const std::vector<SparseVector> &vs, std::size_t ncols) {
  Echelon e(ncols);
  for (const auto &v : vs) e.insert(v);
  return e.rank();
}

/// Exact sparse product row . x.
inline Rational dot(const SparseVector &row, const SparseVector &x) {
  Rational s = 0;
  std::size_t i = 0, j = 0;
  while (i < row.size() && j < x.size()) {
    if (row[i].first < x[j].first) {
      ++i;
    } else if (x[j].first < row[i].first) {
      ++j;
    } else {
      s += row[i].second * x[j].second;
      ++i;
      ++j;
    }
  }
  return s;
}

} // namespace svlie::linalg
