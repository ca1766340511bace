#include <random>

#include "braidrack/error.hpp"
#include "braidrack/permutation.hpp"
#include "braidrack/rack.hpp"
#include "doctest.h"
#include "oracle.hpp"

using namespace braidrack;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::InvalidArgument;
}

std::vector<int> random_relabel(int d, std::mt19937_64& rng) {
  std::vector<int> p(static_cast<std::size_t>(d));
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace

TEST_CASE("permutations parse, compose and report cycle types") {
  Perm a = Perm::parse("(1 2 3)", 4);
  Perm b = Perm::parse("(3 4)", 4);
  CHECK((a * b)(3) == 0);  // a(b(4)) = a(3) = 1, 0-based
  CHECK(a.order() == 3);
  CHECK((a * b).order() == 4);
  CHECK(a.inverse() * a == Perm::identity(4));
  CHECK(a.pow(-1) == a.inverse());
  CHECK(Perm::parse(a.str(), 4) == a);
  CHECK((a * b).cycle_type() == std::vector<int>{4});
  CHECK(b.cycle_type() == std::vector<int>{2, 1, 1});
  CHECK(lcm_of({4, 6}) == 12);
  PermGroup s4({Perm::parse("(1 2)", 4), Perm::parse("(1 2 3 4)", 4)});
  CHECK(s4.order() == 24);
  CHECK(s4.centralizer(Perm::parse("(1 2 3 4)", 4)).size() == 4);
  CHECK(group_order({Perm::parse("(1 2 3)", 4), Perm::parse("(2 3 4)", 4)}) == 12);
}

TEST_CASE("rack tables are validated") {
  CHECK(kind_of([] { Rack::from_table({{1, 1}, {1, 2}}); }) == ErrorKind::RowNotPermutation);
  // rows are permutations but the table is not self-distributive
  CHECK(kind_of([] { Rack::from_table({{2, 1, 3}, {1, 2, 3}, {1, 2, 3}}); }) == ErrorKind::SelfDistributivityFails);
  CHECK(kind_of([] { preset("E8"); }) == ErrorKind::UnknownPreset);
  CHECK(kind_of([] { affine_rack(7, 0); }) == ErrorKind::AffineNotARack);
  CHECK(kind_of([] { affine_rack(6, 5); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("presets satisfy the rack axioms by brute force") {
  for (const char* name : {"D3", "T", "A", "B", "C", "Aff(7,3)", "Aff(7,5)", "Aff(9,2)", "Aff(5,2)", "trivial(4)"}) {
    CAPTURE(name);
    Rack r = preset(name);
    auto t = oracle::zero_based(r.table());
    CHECK(oracle::self_distributive(t));
    for (int x = 0; x < r.size(); ++x)
      for (int y = 0; y < r.size(); ++y) CHECK(r.op(x, r.op_inv(x, y)) == y);
    CHECK(is_braided(r) == oracle::braided(t));
    CHECK(is_indecomposable(r) == oracle::indecomposable(t));
  }
}

TEST_CASE("affine racks follow the defining formula") {
  // Aff(7,3): x > y = (1 - 3) x + 3 y mod 7
  Rack r = affine_rack(7, 3);
  for (int x = 0; x < 7; ++x)
    for (int y = 0; y < 7; ++y) CHECK(r.op(x, y) == (((1 - 3) * x + 3 * y) % 7 + 7) % 7);
  SmallField f9(9);
  CHECK(f9.characteristic() == 3);
  for (int a = 0; a < 9; ++a)
    for (int b = 0; b < 9; ++b) {
      CHECK(f9.mul(a, b) == f9.mul(b, a));
      CHECK(f9.sub(f9.add(a, b), b) == a);
    }
  // every nonzero element of F_9 has an inverse
  for (int a = 1; a < 9; ++a) {
    int hits = 0;
    for (int b = 1; b < 9; ++b) hits += f9.mul(a, b) == 1;
    CHECK(hits == 1);
  }
}

TEST_CASE("invariants of the reference racks") {
  struct Row {
    const char* name;
    int size, degree, k3;
    std::optional<int> m;
    std::size_t inner;
  };
  for (const Row& row : {Row{"D3", 3, 2, 2, 0, 6}, Row{"T", 4, 3, 3, 3, 12}, Row{"A", 6, 2, 4, 0, 24},
                         Row{"B", 6, 4, 4, 0, 24}, Row{"C", 10, 2, 6, 0, 120}, Row{"Aff(7,3)", 7, 6, 6, 0, 42}}) {
    CAPTURE(row.name);
    Rack r = preset(row.name);
    RackInvariants inv = invariants(r);
    auto t = oracle::zero_based(r.table());
    CHECK(inv.size == row.size);
    REQUIRE(inv.degree);
    CHECK(*inv.degree == row.degree);
    CHECK(*inv.degree == oracle::row_order(t[0]));
    CHECK(inv.k_at(3) == row.k3);
    CHECK(inv.k_at(3) == oracle::moved_points(t[0]));
    CHECK(inv.m == row.m);
    CHECK(inv.inner_group_order == row.inner);
    CHECK(inv.is_quandle);
    CHECK(inv.is_braided);
  }
  RackInvariants tr = invariants(trivial_rack(3));
  CHECK_FALSE(tr.is_indecomposable);
  CHECK(tr.components.size() == 3);
  CHECK_FALSE(tr.degree);
  CHECK_FALSE(tr.undefined_reason.empty());
}

TEST_CASE("isomorphism and canonical tables are relabeling invariant") {
  std::mt19937_64 rng(5);
  for (const char* name : {"D3", "T", "A", "B", "C", "Aff(7,3)", "Aff(9,2)"}) {
    CAPTURE(name);
    Rack r = preset(name);
    auto canon = canonical_table(r);
    REQUIRE(canon);
    for (int k = 0; k < 5; ++k) {
      Rack s = r.relabeled(random_relabel(r.size(), rng));
      IsoResult iso = find_isomorphism(r, s);
      REQUIRE(iso.isomorphic);
      for (int x = 0; x < r.size(); ++x)
        for (int y = 0; y < r.size(); ++y) CHECK(s.op(iso.map[x], iso.map[y]) == iso.map[r.op(x, y)]);
      CHECK(canonical_table(s) == canon);
    }
  }
  CHECK_FALSE(is_isomorphic(preset("A"), preset("B")));
  CHECK_FALSE(is_isomorphic(preset("Aff(7,3)"), preset("Aff(7,5)")));
  CHECK(canonical_table(preset("A")) != canonical_table(preset("B")));
}

TEST_CASE("conjugacy class racks") {
  ClassRack cr = conjugacy_class_rack({Perm::parse("(1 2)", 3), Perm::parse("(1 2 3)", 3)}, Perm::parse("(1 2)", 3));
  CHECK(cr.rack.size() == 3);
  CHECK(is_isomorphic(cr.rack, preset("D3")));
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) {
      const Perm& px = cr.labels[x];
      CHECK(px * cr.labels[y] * px.inverse() == cr.labels[cr.rack.op(x, y)]);
    }
}
