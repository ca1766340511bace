#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "braidrack/rack.hpp"

namespace braidrack {

struct SearchSpec {
  std::vector<int> degrees{2, 3, 4, 6};
  int k3_max = 6;
  int size_max = 12;
  bool require_indecomposable = true;
  int size_cap = 16;  // hard limit on size_max
  unsigned threads = 0;
};

struct SearchStats {
  std::size_t branches = 0;   // (size, cycle type of a row) combinations searched
  std::size_t nodes = 0;      // search nodes over all branches
  std::size_t solutions = 0;  // completed tables before deduplication
};

struct SearchResult {
  std::vector<Rack> racks;  // canonical labelings, ordered by size then table
  SearchStats stats;
};

// Braided racks whose rows all share one cycle type, found by depth-first
// search over table cells. Row 1 is fixed to a representative of each
// admissible cycle type; propagation enforces the rack axioms, the braided
// dichotomy and the cycle type. Results are deduplicated up to isomorphism.
// Without require_indecomposable, decomposable racks are reported only when
// all their rows share a cycle type.
SearchResult search_racks(const SearchSpec& spec);

// Cycle types (non-trivial cycle lengths, decreasing) of a row with k3 moved
// points and the given order.
std::vector<std::vector<int>> row_cycle_types(int degree, int k3);

struct TableRow {
  std::string table;  // "braided racks" or "degree two"
  std::string rack;   // preset name
  int degree = 0, size = 0, k3 = 0;
  std::optional<int> m;
  int got_degree = 0, got_size = 0, got_k3 = 0, got_m = 0;
  bool match = false;
};

// Recomputes the reference table rows of rack invariants from the presets.
std::vector<TableRow> verify_tables();

}  // namespace braidrack
