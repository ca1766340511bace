#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <unordered_map>
#include <utility>
#include <vector>

#include "braidrack/field.hpp"

namespace braidrack {

// Sparse vector with strictly increasing indices and no stored zeros.
template <class F>
struct SparseVec {
  using Element = typename F::Element;
  std::vector<std::uint64_t> idx;
  std::vector<Element> val;

  std::size_t size() const { return idx.size(); }
  bool empty() const { return idx.empty(); }
};

// Sorts, merges duplicates and drops zeros.
template <class F>
SparseVec<F> make_sparse(const F& f, std::vector<std::pair<std::uint64_t, typename F::Element>> entries) {
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec<F> v;
  for (auto& [i, x] : entries) {
    if (!v.idx.empty() && v.idx.back() == i) {
      v.val.back() = f.add(v.val.back(), x);
    } else {
      if (!v.idx.empty() && f.is_zero(v.val.back())) {
        v.idx.pop_back();
        v.val.pop_back();
      }
      v.idx.push_back(i);
      v.val.push_back(std::move(x));
    }
  }
  if (!v.idx.empty() && f.is_zero(v.val.back())) {
    v.idx.pop_back();
    v.val.pop_back();
  }
  return v;
}

// a*x + b*y; either scale may be omitted (treated as one).
template <class F>
SparseVec<F> combine(const F& f, const typename F::Element* a, const SparseVec<F>& x, const typename F::Element& b,
                     const SparseVec<F>& y) {
  SparseVec<F> out;
  out.idx.reserve(x.size() + y.size());
  out.val.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  auto push = [&](std::uint64_t k, typename F::Element v) {
    if (!f.is_zero(v)) {
      out.idx.push_back(k);
      out.val.push_back(std::move(v));
    }
  };
  while (i < x.size() || j < y.size()) {
    if (j >= y.size() || (i < x.size() && x.idx[i] < y.idx[j])) {
      push(x.idx[i], a ? f.mul(*a, x.val[i]) : x.val[i]);
      ++i;
    } else if (i >= x.size() || y.idx[j] < x.idx[i]) {
      push(y.idx[j], f.mul(b, y.val[j]));
      ++j;
    } else {
      auto left = a ? f.mul(*a, x.val[i]) : x.val[i];
      push(x.idx[i], f.add(left, f.mul(b, y.val[j])));
      ++i;
      ++j;
    }
  }
  return out;
}

template <class F>
typename F::Element coefficient(const F& f, const SparseVec<F>& v, std::uint64_t k) {
  auto it = std::lower_bound(v.idx.begin(), v.idx.end(), k);
  if (it == v.idx.end() || *it != k) return f.zero();
  return v.val[static_cast<std::size_t>(it - v.idx.begin())];
}

template <class F>
struct SparseMatrix {
  std::uint64_t cols = 0;
  std::vector<SparseVec<F>> rows;
};

// Row echelon form built incrementally; rows are keyed by leading column.
// Field mode keeps pivots equal to one; fraction-free mode eliminates by
// cross-multiplication and removes row content (for QQ-based domains).
template <class F>
class Echelon {
 public:
  using Element = typename F::Element;

  explicit Echelon(F f, bool fraction_free = F::kFractionFree) : f_(std::move(f)), fraction_free_(fraction_free) {}

  const F& field() const { return f_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<SparseVec<F>>& rows() const { return rows_; }
  bool has_pivot(std::uint64_t col) const { return pivot_.count(col) != 0; }

  // Returns true when v was independent of the stored rows.
  bool insert(SparseVec<F> v) {
    v = reduce_leading(std::move(v));
    if (v.empty()) return false;
    normalize(v);
    pivot_.emplace(v.idx.front(), rows_.size());
    rows_.push_back(std::move(v));
    reduced_ = false;
    return true;
  }

  // Reduces v until its leading column is not a pivot column.
  SparseVec<F> reduce_leading(SparseVec<F> v) const {
    while (!v.empty()) {
      auto it = pivot_.find(v.idx.front());
      if (it == pivot_.end()) break;
      v = eliminate(v, rows_[it->second], 0);
    }
    return v;
  }

  // Reduces every pivot column of v. Field mode only; the result is the
  // unique representative of v modulo the row space with no pivot columns.
  SparseVec<F> reduce_full(SparseVec<F> v) const {
    std::size_t pos = 0;
    while (pos < v.size()) {
      auto it = pivot_.find(v.idx[pos]);
      if (it == pivot_.end()) {
        ++pos;
        continue;
      }
      v = eliminate(v, rows_[it->second], pos);
    }
    return v;
  }

  // Brings the stored rows to reduced echelon form (pivots one, zeros above).
  void make_reduced() {
    if (reduced_) return;
    std::vector<std::size_t> order(rows_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return rows_[a].idx.front() > rows_[b].idx.front(); });
    bool saved = fraction_free_;
    fraction_free_ = false;
    for (auto& r : rows_) normalize(r);
    for (std::size_t k : order) {
      SparseVec<F> r = rows_[k];
      std::uint64_t lead = r.idx.front();
      std::size_t pos = 1;
      while (pos < r.size()) {
        auto it = pivot_.find(r.idx[pos]);
        if (it == pivot_.end() || r.idx[pos] == lead) {
          ++pos;
          continue;
        }
        r = eliminate(r, rows_[it->second], pos);
      }
      rows_[k] = std::move(r);
    }
    fraction_free_ = saved;
    reduced_ = !fraction_free_;
  }

  // Basis of the right kernel of the stored rows over columns [0, cols).
  std::vector<SparseVec<F>> kernel(std::uint64_t cols) {
    bool saved = fraction_free_;
    make_reduced();
    std::vector<SparseVec<F>> out;
    for (std::uint64_t c = 0; c < cols; ++c) {
      if (pivot_.count(c)) continue;
      std::vector<std::pair<std::uint64_t, Element>> entries{{c, f_.one()}};
      for (const auto& r : rows_) {
        Element x = coefficient(f_, r, c);
        if (!f_.is_zero(x)) entries.emplace_back(r.idx.front(), f_.neg(x));
      }
      out.push_back(make_sparse(f_, std::move(entries)));
    }
    fraction_free_ = saved;
    return out;
  }

 private:
  // Eliminates column v.idx[pos] of v using row p whose leading column it is.
  SparseVec<F> eliminate(const SparseVec<F>& v, const SparseVec<F>& p, std::size_t pos) const {
    if (!fraction_free_) {
      Element s = f_.neg(v.val[pos]);
      return combine(f_, static_cast<const Element*>(nullptr), v, s, p);
    }
    if constexpr (F::kFractionFree) {
      Element a = p.val.front();
      Element b = f_.neg(v.val[pos]);
      SparseVec<F> out = combine(f_, &a, v, b, p);
      f_.make_primitive(out.val);
      return out;
    } else {
      throw Error(ErrorKind::InvalidArgument, "fraction-free elimination needs a rational domain");
    }
  }

  void normalize(SparseVec<F>& v) const {
    if (v.empty()) return;
    if constexpr (F::kFractionFree) {
      if (fraction_free_) {
        f_.make_primitive(v.val);
        return;
      }
    }
    if (f_.equal(v.val.front(), f_.one())) return;
    Element s = f_.inv(v.val.front());
    for (auto& x : v.val) x = f_.mul(s, x);
  }

  F f_;
  bool fraction_free_;
  bool reduced_ = true;
  std::vector<SparseVec<F>> rows_;
  std::unordered_map<std::uint64_t, std::size_t> pivot_;
};

// Exact rank. Columns are reordered by increasing fill (static Markowitz-style
// ordering) and rows are inserted sparsest first.
template <class F>
std::size_t rank(const F& f, const SparseMatrix<F>& m) {
  std::unordered_map<std::uint64_t, std::uint64_t> count;
  for (const auto& r : m.rows)
    for (auto c : r.idx) ++count[c];
  std::vector<std::pair<std::uint64_t, std::uint64_t>> order;
  order.reserve(count.size());
  for (auto [c, k] : count) order.emplace_back(k, c);
  std::sort(order.begin(), order.end());
  std::unordered_map<std::uint64_t, std::uint64_t> relabel;
  for (std::size_t i = 0; i < order.size(); ++i) relabel[order[i].second] = i;
  std::vector<std::size_t> row_order(m.rows.size());
  std::iota(row_order.begin(), row_order.end(), 0);
  std::stable_sort(row_order.begin(), row_order.end(),
                   [&](std::size_t a, std::size_t b) { return m.rows[a].size() < m.rows[b].size(); });
  Echelon<F> ech(f);
  for (std::size_t k : row_order) {
    const auto& r = m.rows[k];
    std::vector<std::pair<std::uint64_t, typename F::Element>> entries;
    entries.reserve(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) entries.emplace_back(relabel[r.idx[i]], r.val[i]);
    ech.insert(make_sparse(f, std::move(entries)));
  }
  return ech.rank();
}

template <class F>
std::vector<SparseVec<F>> kernel_basis(const F& f, const SparseMatrix<F>& m) {
  Echelon<F> ech(f, false);
  for (const auto& r : m.rows) ech.insert(r);
  return ech.kernel(m.cols);
}

template <class F>
SparseMatrix<F> dense_matrix(const F& f, const std::vector<std::vector<typename F::Element>>& rows) {
  SparseMatrix<F> m;
  for (const auto& row : rows) {
    m.cols = std::max<std::uint64_t>(m.cols, row.size());
    std::vector<std::pair<std::uint64_t, typename F::Element>> entries;
    for (std::size_t j = 0; j < row.size(); ++j) entries.emplace_back(j, row[j]);
    m.rows.push_back(make_sparse(f, std::move(entries)));
  }
  return m;
}

// Dense matrix-vector product check helper: m * v.
template <class F>
std::vector<typename F::Element> apply(const F& f, const SparseMatrix<F>& m, const SparseVec<F>& v) {
  std::vector<typename F::Element> out;
  for (const auto& r : m.rows) {
    typename F::Element acc = f.zero();
    std::size_t i = 0, j = 0;
    while (i < r.size() && j < v.size()) {
      if (r.idx[i] < v.idx[j]) {
        ++i;
      } else if (v.idx[j] < r.idx[i]) {
        ++j;
      } else {
        acc = f.add(acc, f.mul(r.val[i], v.val[j]));
        ++i;
        ++j;
      }
    }
    out.push_back(acc);
  }
  return out;
}

}  // namespace braidrack
