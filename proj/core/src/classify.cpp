#include "braidrack/classify.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

#include "braidrack/error.hpp"
#include "braidrack/parallel.hpp"

namespace braidrack {

namespace {

using Mask = std::uint32_t;

bool single(Mask m) { return m != 0 && (m & (m - 1)) == 0; }
int value_of(Mask m) { return std::countr_zero(m); }
Mask bit(int v) { return Mask{1} << v; }

void partitions(int rest, int max_part, const std::vector<int>& parts, std::vector<int>& cur,
                std::vector<std::vector<int>>& out) {
  if (rest == 0) {
    out.push_back(cur);
    return;
  }
  for (int p : parts) {
    if (p > max_part || p > rest) continue;
    cur.push_back(p);
    partitions(rest - p, p, parts, cur, out);
    cur.pop_back();
  }
}

class Searcher {
 public:
  Searcher(int d, const std::vector<int>& type) : d_(d) {
    int moved = std::accumulate(type.begin(), type.end(), 0);
    fixed_ = d - moved;
    want_.assign(static_cast<std::size_t>(d + 1), 0);
    want_[1] = fixed_;
    for (int p : type) ++want_[static_cast<std::size_t>(p)];
    longest_ = type.empty() ? 1 : type.front();
    Mask all = (d == 32) ? ~Mask{0} : (bit(d) - 1);
    dom_.assign(static_cast<std::size_t>(d * d), all);
    for (int x = 0; x < d; ++x) at(dom_, x, x) = bit(x);
    // First row: fixed points first, then the cycles on consecutive points.
    int s = fixed_;
    for (int y = 0; y < fixed_; ++y) at(dom_, 0, y) = bit(y);
    for (int p : type) {
      for (int i = 0; i < p; ++i) at(dom_, 0, s + i) = bit(s + (i + 1) % p);
      s += p;
    }
  }

  template <class Visit>
  void run(const Visit& visit) {
    std::vector<Mask> dom = dom_;
    dfs(dom, visit);
  }

  std::size_t nodes() const { return nodes_; }

 private:
  Mask& at(std::vector<Mask>& dom, int x, int y) const {
    return dom[static_cast<std::size_t>(x * d_ + y)];
  }

  // Intersects a cell with m; false when the cell empties.
  bool restrict(std::vector<Mask>& dom, int x, int y, Mask m, bool& changed) const {
    Mask& c = at(dom, x, y);
    Mask n = c & m;
    if (n == c) return true;
    c = n;
    changed = true;
    return n != 0;
  }

  bool row_pass(std::vector<Mask>& dom, int x, bool& changed) const {
    Mask used = 0;
    for (int y = 0; y < d_; ++y) {
      Mask c = at(dom, x, y);
      if (single(c)) {
        if (used & c) return false;
        used |= c;
      }
    }
    for (int y = 0; y < d_; ++y)
      if (!single(at(dom, x, y)) && !restrict(dom, x, y, ~used, changed)) return false;
    for (int v = 0; v < d_; ++v) {
      int count = 0, last = -1;
      for (int y = 0; y < d_; ++y)
        if (at(dom, x, y) & bit(v)) {
          ++count;
          last = y;
        }
      if (count == 0) return false;
      if (count == 1 && !single(at(dom, x, last))) {
        at(dom, x, last) = bit(v);
        changed = true;
      }
    }
    int forced = 0, possible = 0;
    for (int y = 0; y < d_; ++y) {
      Mask c = at(dom, x, y);
      if (c == bit(y)) ++forced;
      if (c & bit(y)) ++possible;
    }
    if (forced > fixed_ || possible < fixed_) return false;
    if (forced == fixed_ && possible > fixed_) {
      for (int y = 0; y < d_; ++y)
        if (at(dom, x, y) != bit(y) && !restrict(dom, x, y, ~bit(y), changed)) return false;
    } else if (possible == fixed_ && forced < fixed_) {
      for (int y = 0; y < d_; ++y)
        if ((at(dom, x, y) & bit(y)) && !restrict(dom, x, y, bit(y), changed)) return false;
    }
    // Closed cycles must fit the cycle type; open chains must fit a cycle.
    std::vector<int> seen(static_cast<std::size_t>(d_ + 1), 0);
    std::vector<char> visited(static_cast<std::size_t>(d_), 0);
    for (int s = 0; s < d_; ++s) {
      if (visited[static_cast<std::size_t>(s)]) continue;
      int len = 0, y = s;
      bool closed = false;
      while (true) {
        visited[static_cast<std::size_t>(y)] = 1;
        ++len;
        Mask c = at(dom, x, y);
        if (!single(c)) break;
        y = value_of(c);
        if (y == s) {
          closed = true;
          break;
        }
        if (visited[static_cast<std::size_t>(y)]) break;
      }
      if (closed) {
        if (++seen[static_cast<std::size_t>(len)] > want_[static_cast<std::size_t>(len)]) return false;
      } else if (len > longest_ + 1) {
        return false;
      }
    }
    return true;
  }

  // Braided quandles: x and y commute both ways, or x > (y > x) = y.
  bool braid_pass(std::vector<Mask>& dom, int x, int y, bool& changed) const {
    Mask c = at(dom, x, y);
    if (c == bit(y)) return restrict(dom, y, x, bit(x), changed);
    if (!(c & bit(y)) && !restrict(dom, y, x, ~bit(x), changed)) return false;
    if (single(c)) {
      int v = value_of(c);
      if (!restrict(dom, y, v, bit(x), changed)) return false;
      Mask pre = 0;
      for (int w = 0; w < d_; ++w)
        if (at(dom, x, w) & bit(y)) pre |= bit(w);
      if (!restrict(dom, y, x, pre, changed)) return false;
    }
    return true;
  }

  // x > (y > z) = (x > y) > (x > z) with x > y = a known.
  bool distributive_pass(std::vector<Mask>& dom, int x, int y, int a, bool& changed) const {
    for (int z = 0; z < d_; ++z) {
      Mask lhs_cells = at(dom, y, z), rhs_cells = at(dom, x, z);
      Mask s1 = 0, s2 = 0;
      for (Mask m = lhs_cells; m; m &= m - 1) s1 |= at(dom, x, value_of(m));
      for (Mask m = rhs_cells; m; m &= m - 1) s2 |= at(dom, a, value_of(m));
      Mask s = s1 & s2;
      if (s == 0) return false;
      Mask nb = 0, nc = 0;
      for (Mask m = lhs_cells; m; m &= m - 1)
        if (at(dom, x, value_of(m)) & s) nb |= m & (~m + 1);
      for (Mask m = rhs_cells; m; m &= m - 1)
        if (at(dom, a, value_of(m)) & s) nc |= m & (~m + 1);
      if (!restrict(dom, y, z, nb, changed) || !restrict(dom, x, z, nc, changed)) return false;
      if (single(nb) && !restrict(dom, x, value_of(nb), s, changed)) return false;
      if (single(nc) && !restrict(dom, a, value_of(nc), s, changed)) return false;
    }
    return true;
  }

  bool propagate(std::vector<Mask>& dom) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int x = 0; x < d_; ++x)
        if (!row_pass(dom, x, changed)) return false;
      for (int x = 0; x < d_; ++x)
        for (int y = 0; y < d_; ++y)
          if (x != y && !braid_pass(dom, x, y, changed)) return false;
      for (int x = 0; x < d_; ++x)
        for (int y = 0; y < d_; ++y) {
          Mask c = at(dom, x, y);
          if (x != y && single(c) && !distributive_pass(dom, x, y, value_of(c), changed)) return false;
        }
    }
    return true;
  }

  template <class Visit>
  void dfs(std::vector<Mask>& dom, const Visit& visit) {
    ++nodes_;
    if (!propagate(dom)) return;
    int best = -1, best_count = 64;
    for (int i = 0; i < d_ * d_; ++i) {
      int c = std::popcount(dom[static_cast<std::size_t>(i)]);
      if (c > 1 && c < best_count) {
        best = i;
        best_count = c;
      }
    }
    if (best < 0) {
      std::vector<int> flat(dom.size());
      for (std::size_t i = 0; i < dom.size(); ++i) flat[i] = value_of(dom[i]);
      visit(flat);
      return;
    }
    for (Mask m = dom[static_cast<std::size_t>(best)]; m; m &= m - 1) {
      std::vector<Mask> next = dom;
      next[static_cast<std::size_t>(best)] = m & (~m + 1);
      dfs(next, visit);
    }
  }

  int d_;
  int fixed_ = 0;
  int longest_ = 1;
  std::vector<int> want_;
  std::vector<Mask> dom_;
  std::size_t nodes_ = 0;
};

struct Branch {
  int size;
  std::vector<int> type;
};

std::vector<std::uint16_t> table_key(const Rack& r) {
  if (auto c = canonical_table(r)) return *c;
  throw Error(ErrorKind::InvalidArgument, "canonical form budget exceeded for a rack of size " + std::to_string(r.size()));
}

}  // namespace

std::vector<std::vector<int>> row_cycle_types(int degree, int k3) {
  std::vector<int> parts;
  for (int p = degree; p >= 2; --p)
    if (degree % p == 0) parts.push_back(p);
  std::vector<std::vector<int>> all, out;
  std::vector<int> cur;
  partitions(k3, degree, parts, cur, all);
  for (auto& t : all)
    if (lcm_of(t) == degree) out.push_back(std::move(t));
  return out;
}

SearchResult search_racks(const SearchSpec& spec) {
  if (spec.size_max > spec.size_cap || spec.size_cap > 16)
    throw Error(ErrorKind::SizeCapExceeded,
                "size_max " + std::to_string(spec.size_max) + " exceeds the cap " + std::to_string(spec.size_cap));
  for (int deg : spec.degrees)
    if (deg != 2 && deg != 3 && deg != 4 && deg != 6)
      throw Error(ErrorKind::InvalidArgument, "degree filter must be a subset of {2,3,4,6}");
  std::vector<Branch> branches;
  for (int d = 2; d <= spec.size_max; ++d)
    for (int deg : spec.degrees)
      for (int k3 = 1; k3 <= std::min(spec.k3_max, d - 1); ++k3)
        for (auto& t : row_cycle_types(deg, k3)) branches.push_back({d, t});

  std::mutex mu;
  std::map<std::vector<std::uint16_t>, int> found;  // canonical table -> size
  SearchResult res;
  res.stats.branches = branches.size();
  parallel_for(branches.size(), resolve_threads(spec.threads), [&](std::size_t i) {
    const Branch& b = branches[i];
    Searcher s(b.size, b.type);
    std::size_t solutions = 0;
    std::set<std::vector<std::uint16_t>> local;
    s.run([&](const std::vector<int>& flat) {
      ++solutions;
      Rack r = Rack::from_flat(b.size, flat);
      if (!is_braided(r)) return;
      if (spec.require_indecomposable && !is_indecomposable(r)) return;
      local.insert(table_key(r));
    });
    std::lock_guard<std::mutex> lock(mu);
    res.stats.nodes += s.nodes();
    res.stats.solutions += solutions;
    for (auto& k : local) found.emplace(k, b.size);
  });

  std::vector<std::pair<int, std::vector<std::uint16_t>>> ordered;
  for (auto& [k, d] : found) ordered.emplace_back(d, k);
  std::sort(ordered.begin(), ordered.end());
  for (auto& [d, k] : ordered) {
    std::vector<int> flat(k.begin(), k.end());
    res.racks.push_back(Rack::from_flat(d, flat));
  }
  return res;
}

std::vector<TableRow> verify_tables() {
  struct Ref {
    const char* table;
    const char* rack;
    int degree, size, k3;
    std::optional<int> m;
  };
  const Ref refs[] = {
      {"braided racks", "D3", 2, 3, 2, 0},      {"braided racks", "T", 3, 4, 3, 3},
      {"braided racks", "A", 2, 6, 4, 0},       {"braided racks", "B", 4, 6, 4, 0},
      {"braided racks", "C", 2, 10, 6, 0},      {"braided racks", "Aff(7,3)", 6, 7, 6, 0},
      {"braided racks", "Aff(7,5)", 6, 7, 6, 0}, {"degree two", "D3", 2, 3, 2, std::nullopt},
      {"degree two", "A", 2, 6, 4, std::nullopt}, {"degree two", "Aff(9,2)", 2, 9, 8, std::nullopt},
      {"degree two", "C", 2, 10, 6, std::nullopt},
  };
  std::vector<TableRow> out;
  for (const auto& ref : refs) {
    TableRow row;
    row.table = ref.table;
    row.rack = ref.rack;
    row.degree = ref.degree;
    row.size = ref.size;
    row.k3 = ref.k3;
    row.m = ref.m;
    RackInvariants inv = invariants(preset(ref.rack));
    row.got_degree = inv.degree.value_or(0);
    row.got_size = inv.size;
    row.got_k3 = inv.k_at(3);
    row.got_m = inv.m.value_or(-1);
    row.match = row.got_degree == row.degree && row.got_size == row.size && row.got_k3 == row.k3 &&
                (!row.m || *row.m == row.got_m);
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace braidrack
