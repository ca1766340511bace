#include <bit>
#include <set>

#include "braidrack/error.hpp"
#include "braidrack/hurwitz.hpp"
#include "braidrack/percolate.hpp"
#include "braidrack/rack.hpp"
#include "doctest.h"

using namespace braidrack;

namespace {

// Families (T, sigma_2 T, sigma_1 sigma_2 T) from the tuples themselves.
int brute_min_plague(const Rack& r, const HurwitzOrbit& o) {
  std::size_t n = o.size();
  std::vector<std::array<std::size_t, 3>> fam;
  for (std::size_t k = 0; k < n; ++k) {
    Tuple a = o.tuple(k);
    Tuple b = sigma(r, 2, a);
    Tuple c = sigma(r, 1, b);
    fam.push_back({k, *o.index_of(b), *o.index_of(c)});
  }
  auto spreads = [&](std::uint32_t set) {
    bool grew = true;
    while (grew) {
      grew = false;
      for (const auto& f : fam) {
        int in = 0;
        for (std::size_t p : f) in += (set >> p) & 1u;
        if (in >= 2)
          for (std::size_t p : f)
            if (!((set >> p) & 1u)) {
              set |= 1u << p;
              grew = true;
            }
      }
    }
    return set == (n == 32 ? ~0u : (1u << n) - 1);
  };
  int best = static_cast<int>(n);
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    int c = std::popcount(s);
    if (c < best && spreads(s)) best = c;
  }
  return best;
}

}  // namespace

TEST_CASE("minimal plagues agree with exhaustive search") {
  for (const char* name : {"D3", "T", "A", "trivial(3)"}) {
    CAPTURE(name);
    Rack r = preset(name);
    std::set<int> sizes;
    for (const auto& o : all_orbits(r, 3)) {
      if (o.size() > 16 || !sizes.insert(static_cast<int>(o.size())).second) continue;
      PlagueResult res = minimal_plague(o);
      CAPTURE(o.size());
      CHECK(res.min_size == brute_min_plague(r, o));
      Subset w = 0;
      for (int k : res.witness) w |= Subset{1} << k;
      CHECK(quarantine_closure(o, w) == (Subset{1} << o.size()) - 1);
    }
  }
}

TEST_CASE("immunity table across racks") {
  std::map<int, int> expected{{1, 1}, {3, 1}, {6, 2}, {8, 3}, {9, 3}, {12, 4}, {16, 5}, {24, 7}};
  for (const char* name : {"D3", "T", "A", "C", "Aff(7,3)", "trivial(3)"}) {
    CAPTURE(name);
    for (const auto& [size, res] : immunity_table(preset(name), 2)) {
      CAPTURE(size);
      CHECK(res.min_size == expected.at(size));
      CHECK(res.orbit_size == size);
      CHECK(static_cast<long>(res.min_size) * res.immunity_den == res.immunity_num * size);
    }
  }
}

TEST_CASE("quarantine families and closure") {
  Rack r = preset("D3");
  HurwitzOrbit o = orbit(r, {0, 0, 1});
  REQUIRE(o.size() == 8);
  auto fam = quarantine_families(o);
  CHECK(fam.size() == 8);
  for (std::size_t k = 0; k < fam.size(); ++k) CHECK(fam[k][0] == static_cast<int>(k));
  CHECK_THROWS_AS(quarantine_closure(o, 0), Error);
  Subset one = quarantine_closure(o, 1);
  CHECK(one != (Subset{1} << 8) - 1);
}
