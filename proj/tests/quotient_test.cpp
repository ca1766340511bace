#include "braidrack/braiding.hpp"
#include "braidrack/error.hpp"
#include "braidrack/io.hpp"
#include "braidrack/nichols.hpp"
#include "braidrack/quotient.hpp"
#include "braidrack/rack.hpp"
#include "doctest.h"
#include "oracle.hpp"

using namespace braidrack;

TEST_CASE("exterior algebra from the trivial rack with q = -1") {
  RationalField q;
  for (int d : {2, 3, 4}) {
    CAPTURE(d);
    auto c = constant_cocycle(trivial_rack(d), q, q.from_int(-1));
    std::vector<GradedVector<RationalField>> rels;
    for (int i = 0; i < d; ++i) {
      rels.push_back(relation_from_terms(q, d, {{Tuple{i, i}, q.one()}}));
      for (int j = i + 1; j < d; ++j) rels.push_back(relation_from_terms(q, d, {{Tuple{i, j}, q.one()}, {Tuple{j, i}, q.one()}}));
    }
    for (bool in : relations_in_kernel(c, rels)) CHECK(in);
    GradedDims dims = quotient_dims(Presentation<RationalField>{c, rels});
    std::vector<long> expected;
    for (int n = 0; n <= d + 1; ++n) expected.push_back(oracle::binomial(d, n));
    CHECK(dims.dims == expected);
  }
}

TEST_CASE("polynomial algebra is truncated at the requested degree") {
  PrimeField f(5);
  int d = 3;
  auto c = constant_cocycle(trivial_rack(d), f, f.one());
  std::vector<GradedVector<PrimeField>> rels;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) rels.push_back(relation_from_terms(f, d, {{Tuple{i, j}, f.one()}, {Tuple{j, i}, f.from_int(-1)}}));
  QuotientOptions o;
  o.max_degree = 6;
  GradedDims dims = quotient_dims(Presentation<PrimeField>{c, rels}, o);
  std::vector<long> expected;
  for (int n = 0; n <= 6; ++n) expected.push_back(oracle::binomial(n + d - 1, d - 1));
  CHECK(dims.dims == expected);
}

TEST_CASE("D3(-1) presented by its quadratic and quartic relations") {
  // the symmetrizer kernel in degrees 2 and 4 generates the Nichols ideal
  RationalField q;
  auto c = constant_cocycle(preset("D3"), q, q.from_int(-1));
  std::vector<GradedVector<RationalField>> rels;
  for (int x = 0; x < 3; ++x) rels.push_back(relation_from_terms(q, 3, {{Tuple{x, x}, q.one()}}));
  // x1 x2 + x2 x3 + x3 x1 and x1 x3 + x3 x2 + x2 x1
  rels.push_back(relation_from_terms(q, 3, {{Tuple{0, 1}, q.one()}, {Tuple{1, 2}, q.one()}, {Tuple{2, 0}, q.one()}}));
  rels.push_back(relation_from_terms(q, 3, {{Tuple{0, 2}, q.one()}, {Tuple{2, 1}, q.one()}, {Tuple{1, 0}, q.one()}}));
  for (bool in : relations_in_kernel(c, rels)) CHECK(in);
  GradedDims dims = quotient_dims(Presentation<RationalField>{c, rels});
  CHECK(dims.dims == std::vector<long>{1, 3, 4, 3, 1, 0});
}

TEST_CASE("preset relations") {
  auto f4 = std::get<ExtPrime>(parse_field("Fp(2)[t]/(t^2+t+1)"));
  auto c = cocycle_preset("d3char2", preset("D3"), f4);
  auto rels = build_relations(relation_preset("d3char2"), f4, 3);
  for (bool in : relations_in_kernel(c, rels)) CHECK(in);
  QuotientOptions o;
  o.max_degree = 8;
  GradedDims dims = quotient_dims(Presentation<ExtPrime>{c, rels}, o);
  CHECK(dims.dims == std::vector<long>{1, 3, 7, 12, 18, 24, 29, 33, 35});
}

TEST_CASE("inhomogeneous relations are rejected") {
  RationalField q;
  CHECK_THROWS_AS(relation_from_terms(q, 2, {{Tuple{0}, q.one()}, {Tuple{0, 1}, q.one()}}), Error);
}
