#include "braidrack/percolate.hpp"

#include <functional>
#include <numeric>

#include "braidrack/error.hpp"
#include "braidrack/parallel.hpp"

namespace braidrack {

namespace {

Subset full_mask(std::size_t n) { return n >= 32 ? ~Subset{0} : ((Subset{1} << n) - 1); }

void require_small(const HurwitzOrbit& o) {
  if (o.arity() != 3) throw Error(ErrorKind::InvalidArgument, "quarantines are defined on 3-orbits");
  if (o.size() > 32) throw Error(ErrorKind::InvalidArgument, "orbit too large for bitmask subsets");
}

Subset close_with(const std::vector<std::array<int, 3>>& fam, Subset s) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& f : fam) {
      int inside = 0;
      for (int k : f) inside += (s >> k) & 1U;
      if (inside >= 2 && inside < 3) {
        Subset before = s;
        for (int k : f) s |= Subset{1} << k;
        changed = changed || s != before;
      }
    }
  }
  return s;
}

}  // namespace

std::vector<std::array<int, 3>> quarantine_families(const HurwitzOrbit& o) {
  require_small(o);
  std::vector<std::array<int, 3>> fam;
  for (std::size_t k = 0; k < o.size(); ++k) {
    int s2 = o.step(2, k);
    int s12 = o.step(1, static_cast<std::size_t>(s2));
    fam.push_back({static_cast<int>(k), s2, s12});
  }
  return fam;
}

Subset quarantine_closure(const HurwitzOrbit& o, Subset seed) {
  if (seed == 0) throw Error(ErrorKind::EmptySeed, "closure needs a nonempty seed");
  return close_with(quarantine_families(o), seed);
}

PlagueResult minimal_plague(const HurwitzOrbit& o) {
  auto fam = quarantine_families(o);
  int n = static_cast<int>(o.size());
  Subset full = full_mask(o.size());
  PlagueResult res;
  res.orbit_size = n;
  std::vector<int> chosen;
  std::function<bool(int, int, Subset)> dfs = [&](int start, int left, Subset closed) -> bool {
    if (left == 0) {
      ++res.subsets_checked;
      return closed == full;
    }
    for (int k = start; k <= n - left; ++k) {
      // An element already in the closure cannot be part of a minimal plague.
      if ((closed >> k) & 1U) continue;
      chosen.push_back(k);
      if (dfs(k + 1, left - 1, close_with(fam, closed | (Subset{1} << k)))) return true;
      chosen.pop_back();
    }
    return false;
  };
  for (int size = 1; size <= n; ++size) {
    chosen.clear();
    if (dfs(0, size, 0)) {
      res.min_size = size;
      res.witness = chosen;
      long g = std::gcd(static_cast<long>(size), static_cast<long>(n));
      res.immunity_num = size / g;
      res.immunity_den = n / g;
      return res;
    }
  }
  throw Error(ErrorKind::InvalidArgument, "orbit has no plague");  // the whole orbit always is one
}

std::map<int, PlagueResult> immunity_table(const Rack& r, unsigned threads) {
  auto orbits = all_orbits(r, 3);
  std::vector<PlagueResult> results(orbits.size());
  parallel_for(orbits.size(), resolve_threads(threads),
               [&](std::size_t k) { results[k] = minimal_plague(orbits[k]); });
  std::map<int, PlagueResult> table;
  for (auto& res : results) {
    auto [it, fresh] = table.emplace(res.orbit_size, res);
    if (!fresh && it->second.min_size != res.min_size)
      throw Error(ErrorKind::ImmunityMismatch, "orbits of size " + std::to_string(res.orbit_size) +
                                                   " have minimal plagues " + std::to_string(it->second.min_size) +
                                                   " and " + std::to_string(res.min_size));
  }
  return table;
}

}  // namespace braidrack
