#include "braidrack/braiding.hpp"
#include "braidrack/error.hpp"
#include "braidrack/hurwitz.hpp"
#include "braidrack/io.hpp"
#include "braidrack/parallel.hpp"
#include "braidrack/rack.hpp"
#include "doctest.h"

using namespace braidrack;

TEST_CASE("rack and orbit JSON round trips") {
  for (const char* name : {"D3", "B", "Aff(9,2)"}) {
    Rack r = preset(name);
    CHECK(rack_from_json(rack_to_json(r)) == r);
  }
  Rack t = preset("T");
  HurwitzOrbit o = orbit(t, {0, 1, 2});
  HurwitzOrbit back = orbit_from_json(orbit_to_json(o));
  CHECK(back.tuples() == o.tuples());
  CHECK(back.edges(1) == o.edges(1));
  CHECK(back.edges(2) == o.edges(2));
  CHECK_THROWS_AS(rack_from_json("{\"size\": 2, \"table\": [[1,1],[2,2]]}"), Error);
  CHECK_THROWS_AS(rack_from_json("not json"), Error);
}

TEST_CASE("cocycle files") {
  RationalField q;
  auto c = cocycle_preset("A-sign", preset("A"), q);
  CocycleSource src = cocycle_source_from_json(cocycle_to_json(c, "A"));
  CHECK(src.rack == "A");
  CHECK(src.field == "QQ");
  auto back = cocycle_from_source(src, preset("A"), q);
  CHECK(back.values() == c.values());
}

TEST_CASE("words") {
  CHECK(expand_word("a^2b(ab)^3") == Tuple{0, 0, 1, 0, 1, 0, 1, 0, 1});
  CHECK(word_text({0, 2, 1}) == "acb");
  CHECK_THROWS_AS(expand_word("a^"), Error);
  auto rels = relation_preset("t-new");
  CHECK(relations_from_json(relations_to_json(rels)).size() == rels.size());
  IntegralSpec s = integral_preset("t-new");
  CHECK(s.value == "-q^2");
}

TEST_CASE("parallel loop") {
  std::vector<int> hits(100, 0);
  parallel_for(100, 4, [&](std::size_t i) { hits[i] += 1; });
  for (int h : hits) CHECK(h == 1);
  CHECK_THROWS_AS(parallel_for(10, 3, [](std::size_t i) {
    if (i == 7) throw Error(ErrorKind::InvalidArgument, "boom");
  }),
                  Error);
  CHECK(resolve_threads(3) == 3);
  CHECK(resolve_threads(0) >= 1);
}
