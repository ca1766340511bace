#pragma once

// Small brute-force reference computations shared by the unit tests. They
// work on plain tables and dense matrices and do not call the library.

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Table = std::vector<std::vector<int>>;  // 0-based

inline Table zero_based(const std::vector<std::vector<int>>& one_based) {
  Table t = one_based;
  for (auto& row : t)
    for (auto& v : row) --v;
  return t;
}

inline bool self_distributive(const Table& t) {
  int d = static_cast<int>(t.size());
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y)
      for (int z = 0; z < d; ++z)
        if (t[x][t[y][z]] != t[t[x][y]][t[x][z]]) return false;
  return true;
}

inline bool braided(const Table& t) {
  int d = static_cast<int>(t.size());
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y)
      if (t[x][y] != y && t[x][t[y][x]] != y) return false;
  return true;
}

inline bool indecomposable(const Table& t) {
  int d = static_cast<int>(t.size());
  std::vector<int> seen(d, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    int y = stack.back();
    stack.pop_back();
    for (int x = 0; x < d; ++x)
      for (int z : {t[x][y], static_cast<int>(std::find(t[x].begin(), t[x].end(), y) - t[x].begin())})
        if (!seen[z]) {
          seen[z] = 1;
          stack.push_back(z);
        }
  }
  return std::all_of(seen.begin(), seen.end(), [](int s) { return s; });
}

inline int row_order(const std::vector<int>& row) {
  int d = static_cast<int>(row.size());
  std::vector<int> p(d);
  std::iota(p.begin(), p.end(), 0);
  for (int k = 1;; ++k) {
    for (auto& v : p) v = row[v];
    bool id = true;
    for (int i = 0; i < d; ++i) id = id && p[i] == i;
    if (id) return k;
  }
}

inline int moved_points(const std::vector<int>& row) {
  int n = 0;
  for (int i = 0; i < static_cast<int>(row.size()); ++i) n += row[i] != i;
  return n;
}

// Orbits of the braid group on X^3, as sorted lists of word codes.
inline std::vector<std::vector<int>> orbits3(const Table& t) {
  int d = static_cast<int>(t.size());
  int n = d * d * d;
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  auto code = [&](int a, int b, int c) { return (a * d + b) * d + c; };
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int c = 0; c < d; ++c) {
        int w = code(a, b, c);
        parent[find(w)] = find(code(t[a][b], a, c));
        parent[find(w)] = find(code(a, t[b][c], b));
      }
  std::map<int, std::vector<int>> groups;
  for (int w = 0; w < n; ++w) groups[find(w)].push_back(w);
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : groups) out.push_back(members);
  return out;
}

// Rank by dense Gaussian elimination.
inline long rank_mod(std::vector<std::vector<std::int64_t>> m, std::int64_t p) {
  auto inv = [p](std::int64_t a) {
    std::int64_t r = 1, e = p - 2;
    a %= p;
    while (e) {
      if (e & 1) r = r * a % p;
      a = a * a % p;
      e >>= 1;
    }
    return r;
  };
  long rank = 0;
  std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < static_cast<long>(rows); ++c) {
    std::size_t piv = static_cast<std::size_t>(rank);
    while (piv < rows && ((m[piv][c] % p) + p) % p == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[static_cast<std::size_t>(rank)]);
    auto& pr = m[static_cast<std::size_t>(rank)];
    std::int64_t s = inv(((pr[c] % p) + p) % p);
    for (auto& v : pr) v = ((v % p) + p) % p * s % p;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == static_cast<std::size_t>(rank)) continue;
      std::int64_t f = ((m[r][c] % p) + p) % p;
      if (!f) continue;
      for (std::size_t k = 0; k < cols; ++k) m[r][k] = ((m[r][k] - f * pr[k]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

inline long rank_rational(std::vector<std::vector<mpq_class>> m) {
  long rank = 0;
  std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < static_cast<long>(rows); ++c) {
    std::size_t piv = static_cast<std::size_t>(rank);
    while (piv < rows && sgn(m[piv][c]) == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[static_cast<std::size_t>(rank)]);
    auto& pr = m[static_cast<std::size_t>(rank)];
    for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < rows; ++r) {
      if (sgn(m[r][c]) == 0) continue;
      mpq_class f = m[r][c] / pr[c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * pr[k];
    }
    ++rank;
  }
  return rank;
}

// Dense braided symmetrizer over a scalar type with +, * and a rank routine.
// The braiding is c(e_x (x) e_y) = q[x][y] e_{x>y} (x) e_x; S_n is the sum of
// the Matsumoto lifts of all permutations, built from reduced words found by
// breadth-first search in the Cayley graph of S_n.
template <class S>
using Dense = std::vector<std::vector<S>>;

template <class S>
Dense<S> symmetrizer(const Table& t, const std::vector<std::vector<S>>& q, int n, S zero, S one) {
  int d = static_cast<int>(t.size());
  int dim = 1;
  for (int i = 0; i < n; ++i) dim *= d;
  auto digits = [&](int w) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
      v[static_cast<std::size_t>(i)] = w % d;
      w /= d;
    }
    return v;
  };
  auto encode = [&](const std::vector<int>& v) {
    int w = 0;
    for (int x : v) w = w * d + x;
    return w;
  };
  // braid c_i on a dense vector column-wise: image of basis word w is coeff * word
  auto braid = [&](int i, const std::vector<S>& v) {
    std::vector<S> out(static_cast<std::size_t>(dim), zero);
    for (int w = 0; w < dim; ++w) {
      if (v[static_cast<std::size_t>(w)] == zero) continue;
      auto x = digits(w);
      int a = x[static_cast<std::size_t>(i - 1)], b = x[static_cast<std::size_t>(i)];
      x[static_cast<std::size_t>(i - 1)] = t[a][b];
      x[static_cast<std::size_t>(i)] = a;
      out[static_cast<std::size_t>(encode(x))] += q[a][b] * v[static_cast<std::size_t>(w)];
    }
    return out;
  };
  std::vector<int> id(static_cast<std::size_t>(n));
  std::iota(id.begin(), id.end(), 0);
  std::map<std::vector<int>, std::vector<int>> word_of{{id, {}}};
  std::vector<std::vector<int>> frontier{id};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& p : frontier)
      for (int i = 1; i < n; ++i) {
        auto s = p;
        std::swap(s[static_cast<std::size_t>(i - 1)], s[static_cast<std::size_t>(i)]);
        if (word_of.count(s)) continue;
        auto w = word_of[p];
        w.push_back(i);
        word_of[s] = w;
        next.push_back(s);
      }
    frontier = std::move(next);
  }
  Dense<S> cols(static_cast<std::size_t>(dim), std::vector<S>(static_cast<std::size_t>(dim), zero));
  for (int w = 0; w < dim; ++w) {
    std::vector<S> e(static_cast<std::size_t>(dim), zero);
    e[static_cast<std::size_t>(w)] = one;
    for (const auto& [perm, word] : word_of) {
      auto v = e;
      for (auto it = word.rbegin(); it != word.rend(); ++it) v = braid(*it, v);
      for (int k = 0; k < dim; ++k) cols[static_cast<std::size_t>(w)][static_cast<std::size_t>(k)] += v[static_cast<std::size_t>(k)];
    }
  }
  return cols;
}

inline long binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace oracle
