#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "braidrack/hurwitz.hpp"

namespace braidrack {

using Subset = std::uint32_t;  // bitmask over orbit indices, orbits of at most 32 tuples

// Families (T, sigma_2 T, sigma_1 sigma_2 T) as orbit indices, one per tuple.
std::vector<std::array<int, 3>> quarantine_families(const HurwitzOrbit& o);

// Least superset closed under "two positions of a family in => third in".
// A repeated tuple occupies two positions of its family.
Subset quarantine_closure(const HurwitzOrbit& o, Subset seed);

struct PlagueResult {
  int orbit_size = 0;
  int min_size = 0;
  std::vector<int> witness;  // lexicographically least minimal plague
  long immunity_num = 0;     // reduced fraction min_size / orbit_size
  long immunity_den = 1;
  std::uint64_t subsets_checked = 0;
};

PlagueResult minimal_plague(const HurwitzOrbit& o);

// Orbit size -> result, over all 3-orbits. Throws ImmunityMismatch when
// two orbits of equal size disagree.
std::map<int, PlagueResult> immunity_table(const Rack& r, unsigned threads = 1);

}  // namespace braidrack
