#include "braidrack/hurwitz.hpp"
#include "braidrack/rack.hpp"
#include "doctest.h"
#include "oracle.hpp"

using namespace braidrack;

namespace {

std::map<int, long> brute_census(const Rack& r) {
  std::map<int, long> out;
  for (const auto& o : oracle::orbits3(oracle::zero_based(r.table()))) ++out[static_cast<int>(o.size())];
  return out;
}

}  // namespace

TEST_CASE("sigma and its inverse") {
  Rack r = preset("T");
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c) {
        Tuple t{a, b, c};
        CHECK(sigma(r, 1, t) == Tuple{r.op(a, b), a, c});
        CHECK(sigma_inverse(r, 1, sigma(r, 1, t)) == t);
        CHECK(sigma_inverse(r, 2, sigma(r, 2, t)) == t);
        // braid relation
        CHECK(sigma(r, 1, sigma(r, 2, sigma(r, 1, t))) == sigma(r, 2, sigma(r, 1, sigma(r, 2, t))));
      }
}

TEST_CASE("census agrees with union-find over X^3") {
  for (const char* name : {"D3", "T", "A", "B", "C", "Aff(7,3)", "Aff(9,2)", "Aff(5,2)", "trivial(3)"}) {
    CAPTURE(name);
    Rack r = preset(name);
    OrbitCensus c = census(r, 3, 2);
    CHECK(c.counts == brute_census(r));
    CHECK(c.total_check);
    CHECK(c.total == static_cast<long>(r.size()) * r.size() * r.size());
  }
}

TEST_CASE("closed-form census for braided indecomposable racks") {
  for (const char* name : {"D3", "T", "A", "B", "C", "Aff(7,3)"}) {
    CAPTURE(name);
    OrbitCensus c = census(preset(name), 3);
    REQUIRE(c.formula);
    CHECK(c.formula_agrees);
    CHECK(*c.formula == c.counts);
  }
  CHECK(census_formula(3, 0, 2, 0, 0) == std::map<int, long>{{1, 3}, {8, 3}});
  CHECK(census_formula(4, 0, 3, 3, 0) == std::map<int, long>{{1, 4}, {8, 6}, {12, 1}});
}

TEST_CASE("orbit structure") {
  Rack r = preset("C");
  for (const auto& o : all_orbits(r, 3)) {
    Perm prod = tuple_product(r, o.tuple(0));
    for (std::size_t k = 0; k < o.size(); ++k) {
      CHECK(tuple_product(r, o.tuple(k)) == prod);
      for (int i = 1; i <= 2; ++i) {
        CHECK(o.tuple(static_cast<std::size_t>(o.step(i, k))) == sigma(r, i, o.tuple(k)));
        CHECK(o.step_inverse(i, static_cast<std::size_t>(o.step(i, k))) == static_cast<int>(k));
      }
    }
    auto shape = reference_shape(o);
    REQUIRE(shape);
    CHECK(*shape == static_cast<int>(o.size()));
  }
  HurwitzOrbit o = orbit(r, {0, 0, 1});
  Perm g = inner_element(r, {{2, 1}, {4, -1}});
  HurwitzOrbit moved = conjugate_orbit(r, g, o);
  CHECK(orbit_isomorphic(o, moved));
  CHECK_FALSE(orbit_isomorphic(o, reference_orbit(9)));
}

TEST_CASE("orbit partition codes") {
  Rack r = preset("D3");
  OrbitPartition p = orbit_partition(r, 4);
  std::size_t total = 0;
  for (const auto& m : p.members) total += m.size();
  CHECK(total == 81);
  for (std::uint64_t w = 0; w < 81; ++w) CHECK(encode_word(decode_word(w, 4, 3), 3) == w);
  CHECK(encode_word({1, 0, 2}, 3) == 11);
}
