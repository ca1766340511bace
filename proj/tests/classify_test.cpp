#include "braidrack/classify.hpp"
#include "braidrack/error.hpp"
#include "braidrack/rack.hpp"
#include "doctest.h"
#include "oracle.hpp"

using namespace braidrack;

namespace {

// All rack tables of size d by row-wise backtracking over permutations,
// checking self-distributivity on every triple whose rows are assigned.
std::vector<oracle::Table> all_racks(int d) {
  std::vector<std::vector<int>> perms;
  std::vector<int> p(static_cast<std::size_t>(d));
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::vector<oracle::Table> out;
  oracle::Table t(static_cast<std::size_t>(d));
  std::function<void(int)> fill = [&](int row) {
    if (row == d) {
      if (oracle::self_distributive(t)) out.push_back(t);
      return;
    }
    for (const auto& perm : perms) {
      t[static_cast<std::size_t>(row)] = perm;
      bool ok = true;
      for (int x = 0; x <= row && ok; ++x)
        for (int y = 0; y <= row && ok; ++y) {
          int xy = t[x][y];
          if (xy > row) continue;
          for (int z = 0; z < d && ok; ++z) ok = t[x][t[y][z]] == t[xy][t[x][z]];
        }
      if (ok) fill(row + 1);
    }
  };
  fill(0);
  return out;
}

}  // namespace

TEST_CASE("cycle types of rows") {
  CHECK(row_cycle_types(2, 4) == std::vector<std::vector<int>>{{2, 2}});
  CHECK(row_cycle_types(2, 3).empty());
  CHECK(row_cycle_types(6, 6) == std::vector<std::vector<int>>{{6}});
  CHECK(row_cycle_types(6, 5) == std::vector<std::vector<int>>{{3, 2}});
  CHECK(row_cycle_types(4, 6) == std::vector<std::vector<int>>{{4, 2}});
}

TEST_CASE("search agrees with exhaustive enumeration up to size 5") {
  SearchSpec spec;
  spec.k3_max = 5;
  spec.size_max = 5;
  spec.threads = 2;
  SearchResult found = search_racks(spec);
  std::vector<Rack> expected;
  for (int d = 1; d <= 5; ++d)
    for (const auto& t : all_racks(d)) {
      if (!oracle::braided(t) || !oracle::indecomposable(t)) continue;
      int deg = oracle::row_order(t[0]), k3 = oracle::moved_points(t[0]);
      if (k3 == 0 || k3 > spec.k3_max) continue;
      if (deg != 2 && deg != 3 && deg != 4 && deg != 6) continue;
      std::vector<std::vector<int>> one(t);
      for (auto& row : one)
        for (auto& v : row) ++v;
      Rack r = Rack::from_table(one);
      bool seen = false;
      for (const auto& e : expected) seen = seen || is_isomorphic(e, r);
      if (!seen) expected.push_back(r);
    }
  REQUIRE(found.racks.size() == expected.size());
  for (const auto& r : expected) {
    bool hit = false;
    for (const auto& s : found.racks) hit = hit || is_isomorphic(r, s);
    CHECK(hit);
  }
  CHECK(expected.size() == 2);  // D3 and T
}

TEST_CASE("search reproduces the braided presets") {
  SearchSpec spec;
  spec.threads = 2;
  SearchResult res = search_racks(spec);
  std::vector<std::string> names;
  for (const auto& r : res.racks)
    for (const char* p : {"D3", "T", "A", "B", "C", "Aff(7,3)", "Aff(7,5)"})
      if (r.size() == preset(p).size() && is_isomorphic(r, preset(p))) names.push_back(p);
  CHECK(names.size() == res.racks.size());
  std::sort(names.begin(), names.end());
  CHECK(names == std::vector<std::string>{"A", "Aff(7,3)", "Aff(7,5)", "B", "C", "D3", "T"});
  for (const auto& r : res.racks) {
    CHECK(is_braided(r));
    CHECK(is_indecomposable(r));
  }
}

TEST_CASE("search limits") {
  SearchSpec spec;
  spec.size_max = 17;
  CHECK_THROWS_AS(search_racks(spec), Error);
  spec.size_max = 12;
  spec.degrees = {5};
  CHECK_THROWS_AS(search_racks(spec), Error);
}

TEST_CASE("reference table rows") {
  for (const TableRow& row : verify_tables()) {
    CAPTURE(row.rack);
    CHECK(row.match);
  }
}
