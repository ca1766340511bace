#include <random>

#include "braidrack/braiding.hpp"
#include "braidrack/error.hpp"
#include "braidrack/field.hpp"
#include "braidrack/rack.hpp"
#include "doctest.h"

using namespace braidrack;

namespace {

template <class F>
bool cocycle_condition(const Cocycle<F>& c) {
  const Rack& r = c.rack();
  const F& f = c.field();
  for (int x = 0; x < r.size(); ++x)
    for (int y = 0; y < r.size(); ++y)
      for (int z = 0; z < r.size(); ++z)
        if (!f.equal(f.mul(c.q(x, r.op(y, z)), c.q(y, z)), f.mul(c.q(r.op(x, y), r.op(x, z)), c.q(x, z)))) return false;
  return true;
}

}  // namespace

TEST_CASE("constant cocycles satisfy Yang-Baxter") {
  RationalField q;
  for (const char* name : {"D3", "T", "A", "Aff(7,3)"}) {
    CAPTURE(name);
    for (long v : {-1L, 1L, 2L}) {
      auto c = constant_cocycle(preset(name), q, q.from_int(v));
      CHECK(cocycle_condition(c));
      CHECK(yang_baxter_holds(c));
    }
  }
}

TEST_CASE("invalid cocycles are rejected") {
  RationalField q;
  Rack r = preset("D3");
  std::vector<mpq_class> vals(9, 1);
  vals[1] = 2;
  auto bad = cocycle_violation(r, q, vals);
  REQUIRE(bad);
  auto [x, y, z] = *bad;
  CHECK(vals[x * 3 + r.op(y, z)] * vals[y * 3 + z] != vals[r.op(x, y) * 3 + r.op(x, z)] * vals[x * 3 + z]);
  CHECK_THROWS_AS(Cocycle<RationalField>(r, q, vals), Error);
  vals.assign(9, 1);
  vals[4] = 0;
  CHECK_THROWS_AS(Cocycle<RationalField>(r, q, vals), Error);
}

TEST_CASE("coboundary twists stay cocycles") {
  RationalField q;
  auto c = cocycle_preset("A-sign", preset("A"), q);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> pick(1, 5);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<mpq_class> fv;
    for (int i = 0; i < 6; ++i) {
      mpq_class v(pick(rng) * (trial % 2 ? -1 : 1), pick(rng));
      v.canonicalize();
      fv.push_back(v);
    }
    auto t = coboundary_twist(c, fv);
    CHECK(cocycle_condition(t));
    CHECK(yang_baxter_holds(t));
    const Rack& r = c.rack();
    for (int x = 0; x < 6; ++x)
      for (int y = 0; y < 6; ++y) CHECK(t.q(x, y) == c.q(x, y) * fv[y] / fv[r.op(x, y)]);
  }
}

TEST_CASE("group models produce cocycles") {
  struct Case {
    const char* model;
    const char* rack;
  };
  for (const Case& k : {Case{"S4-transposition", "A"}, Case{"S4-4cycle", "B"}, Case{"S5-transposition", "C"},
                        Case{"SL23xZ2", "T"}, Case{"A4", "T"}}) {
    CAPTURE(k.model);
    GroupModel m = group_model_preset(k.model);
    CHECK(m.rack == preset(k.rack));
    for (int x = 0; x < m.rack.size(); ++x) {
      CHECK(m.reps[x] * m.labels[0] * m.reps[x].inverse() == m.labels[x]);
      for (int y = 0; y < m.rack.size(); ++y)
        CHECK(m.labels[x] * m.labels[y] * m.labels[x].inverse() == m.labels[m.rack.op(x, y)]);
    }
  }
  RationalField q;
  for (const char* name : {"A-sign", "A-minus", "B-minus", "C-plus", "C-minus"}) {
    CAPTURE(name);
    CocyclePresetInfo info = cocycle_preset_info(name);
    auto c = cocycle_preset(name, preset(info.rack), q);
    CHECK(cocycle_condition(c));
    CHECK(yang_baxter_holds(c));
    CHECK(c.q(0, 0) == -1);
  }
}

TEST_CASE("character errors") {
  RationalField q;
  GroupModel b = group_model_preset("S4-4cycle");
  // in S4 the centralizer of a 4-cycle is cyclic, so x6 = x1^-1 forces rho(x6) = rho(x1)^-1
  try {
    group_model_cocycle(b, q, CharacterSpec<RationalField>{{{{0}, -1}, {{5}, 1}}});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CharacterInconsistent);
  }
  try {
    group_model_cocycle(b, q, CharacterSpec<RationalField>{{{{1}, -1}}});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotInCentralizer);
  }
  GroupModel env = enveloping_quotient_model(preset("B"), 4);
  CHECK(env.rack == preset("B"));
  auto c = group_model_cocycle(env, q, CharacterSpec<RationalField>{{{{0}, -1}, {{5}, 1}}});
  CHECK(cocycle_condition(c));
}

TEST_CASE("presets over quotient fields") {
  auto e = std::get<ExtRational>(parse_field("QQ[t]/(t^2+t+1)"));
  auto c = cocycle_preset("t-new", preset("T"), e);
  CHECK(cocycle_condition(c));
  CHECK(yang_baxter_holds(c));
  auto f4 = std::get<ExtPrime>(parse_field("Fp(2)[t]/(t^2+t+1)"));
  auto d = cocycle_preset("d3char2", preset("D3"), f4);
  CHECK(yang_baxter_holds(d));
  CHECK(f4.equal(d.q(1, 2), f4.parse("t")));
  CHECK_THROWS_AS(cocycle_preset_info("nope"), Error);
}
