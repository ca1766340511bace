#include "braidrack/hurwitz.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>

#include "braidrack/error.hpp"
#include "braidrack/parallel.hpp"

namespace braidrack {

Tuple sigma(const Rack& r, int i, Tuple t) {
  auto k = static_cast<std::size_t>(i - 1);
  int a = t[k], b = t[k + 1];
  t[k] = r.op(a, b);
  t[k + 1] = a;
  return t;
}

Tuple sigma_inverse(const Rack& r, int i, Tuple t) {
  auto k = static_cast<std::size_t>(i - 1);
  int a = t[k], b = t[k + 1];
  t[k] = b;
  t[k + 1] = r.op_inv(b, a);
  return t;
}

Perm tuple_product(const Rack& r, const Tuple& t) {
  Perm p = Perm::identity(static_cast<std::size_t>(r.size()));
  for (int x : t) p = p * r.phi(x);
  return p;
}

HurwitzOrbit::HurwitzOrbit(int arity, std::vector<Tuple> tuples, std::vector<std::vector<int>> edges)
    : arity_(arity), tuples_(std::move(tuples)), edges_(std::move(edges)) {
  for (std::size_t k = 0; k < tuples_.size(); ++k) index_.emplace(tuples_[k], k);
  inverse_.assign(edges_.size(), std::vector<int>(tuples_.size(), -1));
  for (std::size_t i = 0; i < edges_.size(); ++i)
    for (std::size_t k = 0; k < tuples_.size(); ++k) inverse_[i][static_cast<std::size_t>(edges_[i][k])] = static_cast<int>(k);
}

std::optional<std::size_t> HurwitzOrbit::index_of(const Tuple& t) const {
  auto it = index_.find(t);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

HurwitzOrbit orbit(const Rack& r, const Tuple& seed, std::size_t cap) {
  int n = static_cast<int>(seed.size());
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "empty tuple");
  for (int x : seed)
    if (x < 0 || x >= r.size()) throw Error(ErrorKind::InvalidArgument, "tuple entry out of range");
  std::vector<Tuple> tuples{seed};
  std::map<Tuple, int> index{{seed, 0}};
  auto intern = [&](Tuple t) {
    auto [it, fresh] = index.emplace(t, static_cast<int>(tuples.size()));
    if (fresh) {
      if (tuples.size() >= cap) throw Error(ErrorKind::OrbitSizeCap, "orbit exceeds " + std::to_string(cap) + " tuples");
      tuples.push_back(std::move(t));
    }
    return it->second;
  };
  std::vector<std::vector<int>> edges(static_cast<std::size_t>(std::max(n - 1, 0)));
  for (std::size_t head = 0; head < tuples.size(); ++head) {
    for (int i = 1; i < n; ++i) {
      int target = intern(sigma(r, i, tuples[head]));
      auto& e = edges[static_cast<std::size_t>(i - 1)];
      if (e.size() <= head) e.resize(head + 1, -1);
      e[head] = target;
    }
    for (int i = 1; i < n; ++i) intern(sigma_inverse(r, i, tuples[head]));
  }
  for (auto& e : edges) e.resize(tuples.size(), -1);
  return HurwitzOrbit(n, std::move(tuples), std::move(edges));
}

std::uint64_t encode_word(const Tuple& t, int d) {
  std::uint64_t code = 0;
  for (int x : t) code = code * static_cast<std::uint64_t>(d) + static_cast<std::uint64_t>(x);
  return code;
}

Tuple decode_word(std::uint64_t code, int n, int d) {
  Tuple t(static_cast<std::size_t>(n));
  for (int k = n - 1; k >= 0; --k) {
    t[static_cast<std::size_t>(k)] = static_cast<int>(code % static_cast<std::uint64_t>(d));
    code /= static_cast<std::uint64_t>(d);
  }
  return t;
}

namespace {

std::uint64_t power_checked(int d, int n, std::uint64_t cap) {
  std::uint64_t total = 1;
  for (int k = 0; k < n; ++k) {
    total *= static_cast<std::uint64_t>(d);
    if (total > cap) throw Error(ErrorKind::DegreeCap, std::to_string(d) + "^" + std::to_string(n) + " exceeds cap");
  }
  return total;
}

}  // namespace

OrbitPartition orbit_partition(const Rack& r, int n, std::uint64_t cap) {
  int d = r.size();
  std::uint64_t total = power_checked(d, n, cap);
  std::vector<std::uint32_t> parent(total);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  };
  for (std::uint64_t w = 0; w < total; ++w) {
    Tuple t = decode_word(w, n, d);
    for (int i = 1; i < n; ++i) {
      auto a = find(static_cast<std::uint32_t>(w));
      auto b = find(static_cast<std::uint32_t>(encode_word(sigma(r, i, t), d)));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  OrbitPartition part;
  part.arity = n;
  part.d = d;
  part.orbit_of.assign(total, 0);
  std::vector<std::int64_t> root_id(total, -1);
  for (std::uint64_t w = 0; w < total; ++w) {
    auto root = find(static_cast<std::uint32_t>(w));
    if (root_id[root] < 0) {
      root_id[root] = static_cast<std::int64_t>(part.members.size());
      part.members.emplace_back();
    }
    auto id = static_cast<std::uint32_t>(root_id[root]);
    part.orbit_of[w] = id;
    part.members[id].push_back(w);
  }
  return part;
}

std::vector<HurwitzOrbit> all_orbits(const Rack& r, int n, std::uint64_t cap) {
  OrbitPartition part = orbit_partition(r, n, cap);
  std::vector<HurwitzOrbit> out;
  out.reserve(part.members.size());
  for (const auto& mem : part.members) out.push_back(orbit(r, decode_word(mem.front(), n, r.size())));
  return out;
}

std::map<int, long> census_formula(long d, long k2, long k3, long m, long t) {
  std::map<int, long> f;
  f[1] = d;
  f[3] = d * k2;
  f[6] = d * t / 6;
  f[9] = d * (k2 * (k2 - 1) - t) / 3;
  f[8] = d * k3 / 2;
  f[12] = d * m / 12;
  f[16] = d * (k2 * k3 - k2 * k2 + k2 + t) / 4;
  long rest = d * d * d;
  for (auto [size, count] : f) rest -= size * count;
  f[24] = rest / 24;
  for (auto it = f.begin(); it != f.end();) it = it->second == 0 ? f.erase(it) : std::next(it);
  return f;
}

OrbitCensus census(const Rack& r, int n, unsigned threads) {
  int d = r.size();
  std::uint64_t total = power_checked(d, n, 50'000'000);
  // Workers claim seeds; an orbit is recorded only by the worker whose seed is its least word.
  std::vector<std::atomic<bool>> claimed(total);
  for (auto& c : claimed) c.store(false, std::memory_order_relaxed);
  std::vector<int> owned_size(total, 0);
  parallel_for(total, resolve_threads(threads), [&](std::size_t w) {
    if (claimed[w].load(std::memory_order_relaxed)) return;
    HurwitzOrbit o = orbit(r, decode_word(w, n, d), total + 1);
    std::uint64_t least = w;
    for (const auto& t : o.tuples()) {
      std::uint64_t c = encode_word(t, d);
      least = std::min(least, c);
      claimed[c].store(true, std::memory_order_relaxed);
    }
    if (least == w) owned_size[w] = static_cast<int>(o.size());
  });
  OrbitCensus c;
  c.arity = n;
  for (std::uint64_t w = 0; w < total; ++w)
    if (owned_size[w] > 0) {
      ++c.counts[owned_size[w]];
      c.total += owned_size[w];
    }
  c.total_check = static_cast<std::uint64_t>(c.total) == total;
  if (n == 3 && is_braided(r) && is_indecomposable(r)) {
    RackInvariants inv = invariants(r);
    c.formula = census_formula(d, inv.k_at(2), inv.k_at(3), *inv.m, *inv.t);
    c.formula_agrees = *c.formula == c.counts;
  }
  return c;
}

std::optional<std::vector<int>> orbit_isomorphism(const HurwitzOrbit& o1, const HurwitzOrbit& o2) {
  if (o1.arity() != o2.arity() || o1.size() != o2.size()) return std::nullopt;
  std::size_t n = o1.size();
  if (n == 0) return std::vector<int>{};
  int strands = o1.arity() - 1;
  for (std::size_t start = 0; start < n; ++start) {
    std::vector<int> f(n, -1), g(n, -1);
    f[0] = static_cast<int>(start);
    g[start] = 0;
    std::vector<std::size_t> queue{0};
    bool ok = true;
    for (std::size_t head = 0; head < queue.size() && ok; ++head) {
      std::size_t a = queue[head];
      auto b = static_cast<std::size_t>(f[a]);
      for (int i = 1; i <= strands && ok; ++i) {
        for (int dir = 0; dir < 2 && ok; ++dir) {
          auto na = static_cast<std::size_t>(dir == 0 ? o1.step(i, a) : o1.step_inverse(i, a));
          int nb = dir == 0 ? o2.step(i, b) : o2.step_inverse(i, b);
          if (f[na] < 0) {
            if (g[static_cast<std::size_t>(nb)] >= 0) {
              ok = false;
              break;
            }
            f[na] = nb;
            g[static_cast<std::size_t>(nb)] = static_cast<int>(na);
            queue.push_back(na);
          } else if (f[na] != nb) {
            ok = false;
          }
        }
      }
    }
    if (ok && queue.size() == n) return f;
  }
  return std::nullopt;
}

bool orbit_isomorphic(const HurwitzOrbit& o1, const HurwitzOrbit& o2) { return orbit_isomorphism(o1, o2).has_value(); }

Perm inner_element(const Rack& r, const std::vector<std::pair<int, int>>& word) {
  Perm p = Perm::identity(static_cast<std::size_t>(r.size()));
  for (auto [x, e] : word) p = p * r.phi(x).pow(e);
  return p;
}

HurwitzOrbit conjugate_orbit(const Rack& r, const Perm& g, const HurwitzOrbit& o) {
  for (int x = 0; x < r.size(); ++x)
    for (int y = 0; y < r.size(); ++y)
      if (g(r.op(x, y)) != r.op(g(x), g(y))) throw Error(ErrorKind::InvalidArgument, "g is not a rack automorphism");
  std::vector<Tuple> tuples;
  tuples.reserve(o.size());
  for (const auto& t : o.tuples()) {
    Tuple u = t;
    for (int& x : u) x = g(x);
    tuples.push_back(std::move(u));
  }
  std::vector<std::vector<int>> edges;
  for (int i = 1; i < o.arity(); ++i) edges.push_back(o.edges(i));
  return HurwitzOrbit(o.arity(), std::move(tuples), std::move(edges));
}

HurwitzOrbit reference_orbit(int size) {
  switch (size) {
    case 1: return orbit(trivial_rack(1), {0, 0, 0});
    case 3: return orbit(trivial_rack(2), {1, 0, 0});
    case 6: return orbit(trivial_rack(3), {0, 1, 2});
    case 8: return orbit(preset("D3"), {1, 2, 2});
    case 9: return orbit(preset("C"), {7, 8, 0});
    case 12: return orbit(preset("T"), {0, 2, 1});
    case 16: return orbit(preset("A"), {0, 1, 4});
    case 24: return orbit(preset("Aff(7,3)"), {0, 1, 2});
    default: throw Error(ErrorKind::InvalidArgument, "no reference orbit of size " + std::to_string(size));
  }
}

std::optional<int> reference_shape(const HurwitzOrbit& o) {
  if (o.arity() != 3) return std::nullopt;
  int size = static_cast<int>(o.size());
  for (int s : {1, 3, 6, 8, 9, 12, 16, 24})
    if (s == size) {
      if (orbit_isomorphic(o, reference_orbit(s))) return s;
      return std::nullopt;
    }
  return std::nullopt;
}

}  // namespace braidrack
