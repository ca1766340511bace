#include <random>

#include "braidrack/braiding.hpp"
#include "braidrack/error.hpp"
#include "braidrack/hilbert.hpp"
#include "braidrack/nichols.hpp"
#include "braidrack/rack.hpp"
#include "doctest.h"
#include "oracle.hpp"

using namespace braidrack;

namespace {

std::vector<long> dense_dims_rational(const Cocycle<RationalField>& c, int max_degree) {
  auto t = oracle::zero_based(c.rack().table());
  std::vector<std::vector<mpq_class>> q(t.size(), std::vector<mpq_class>(t.size()));
  for (int x = 0; x < c.size(); ++x)
    for (int y = 0; y < c.size(); ++y) q[x][y] = c.q(x, y);
  std::vector<long> dims{1, c.size()};
  for (int n = 2; n <= max_degree; ++n)
    dims.push_back(oracle::rank_rational(oracle::symmetrizer<mpq_class>(t, q, n, mpq_class(0), mpq_class(1))));
  return dims;
}

std::vector<long> dense_dims_mod(const Cocycle<PrimeField>& c, int max_degree) {
  auto t = oracle::zero_based(c.rack().table());
  std::vector<std::vector<std::int64_t>> q(t.size(), std::vector<std::int64_t>(t.size()));
  for (int x = 0; x < c.size(); ++x)
    for (int y = 0; y < c.size(); ++y) q[x][y] = c.q(x, y);
  std::vector<long> dims{1, c.size()};
  std::int64_t p = c.field().characteristic();
  for (int n = 2; n <= max_degree; ++n) {
    auto m = oracle::symmetrizer<std::int64_t>(t, q, n, 0, 1);
    dims.push_back(oracle::rank_mod(m, p));
  }
  return dims;
}

}  // namespace

TEST_CASE("graded dimensions agree with the dense symmetrizer") {
  RationalField q;
  DimsOptions o;
  o.max_degree = 4;
  o.threads = 2;
  struct Case {
    const char* rack;
    long value;
    int degree;
  };
  for (const Case& k : {Case{"D3", -1, 4}, Case{"D3", 2, 4}, Case{"T", -1, 4}, Case{"T", 1, 3}, Case{"trivial(2)", -1, 4}}) {
    CAPTURE(k.rack);
    CAPTURE(k.value);
    auto c = constant_cocycle(preset(k.rack), q, q.from_int(k.value));
    o.max_degree = k.degree;
    CHECK(graded_dims(c, o).dims == dense_dims_rational(c, k.degree));
  }
  auto a = cocycle_preset("A-sign", preset("A"), q);
  o.max_degree = 3;
  CHECK(graded_dims(a, o).dims == dense_dims_rational(a, 3));
  PrimeField f2(2), f3(3);
  auto t2 = constant_cocycle(preset("T"), f2, f2.one());
  o.max_degree = 4;
  CHECK(graded_dims(t2, o).dims == dense_dims_mod(t2, 4));
  auto d3 = constant_cocycle(preset("D3"), f3, f3.from_int(-1));
  CHECK(graded_dims(d3, o).dims == dense_dims_mod(d3, 4));
}

TEST_CASE("D3 with q = -1") {
  RationalField q;
  auto c = constant_cocycle(preset("D3"), q, q.from_int(-1));
  DimsOptions o;
  o.max_degree = 6;
  o.probe = true;
  GradedDims d = graded_dims(c, o);
  CHECK(d.dims == std::vector<long>{1, 3, 4, 3, 1, 0, 0});
  CHECK(d.probe_prime);
  ConditionReport rep = check_conditions(c, 5);
  CHECK(rep.cond1_truncated);
  CHECK(rep.cond2);
  CHECK(rep.cond3);
  CHECK(rep.cubic.total == 9);
  CHECK(rep.kernel_one_plus_c == 5);
  CHECK(rep.s3_bound);
}

TEST_CASE("symmetrizer factorizations agree") {
  RationalField q;
  auto c = cocycle_preset("A-minus", preset("A"), q);
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> letter(0, 5), coeff(-3, 3);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<std::pair<std::uint64_t, mpq_class>> terms;
    for (int k = 0; k < 4; ++k) terms.emplace_back(encode_word({letter(rng), letter(rng), letter(rng), letter(rng)}, 6), coeff(rng));
    auto v = make_graded(q, 4, terms);
    auto a = symmetrizer(c, v);
    auto b = symmetrizer_factored(c, v);
    CHECK(a.terms.idx == b.terms.idx);
    CHECK(a.terms.val == b.terms.val);
    // c_i^-1 c_i = id
    auto w = braid_map_inverse(c, 2, braid_map(c, 2, v));
    CHECK(w.terms.idx == v.terms.idx);
    CHECK(w.terms.val == v.terms.val);
  }
}

TEST_CASE("derivations detect the kernel") {
  RationalField q;
  auto c = constant_cocycle(preset("D3"), q, q.from_int(-1));
  // x1 x1 lies in ker S_2 when q = -1
  auto v = word_vector(q, 3, Tuple{0, 0}, q.one());
  CHECK(is_zero(symmetrizer(c, v)));
  for (int x = 0; x < 3; ++x) CHECK(is_zero(derivation(c, x, v)));
  auto w = word_vector(q, 3, Tuple{0, 1}, q.one());
  CHECK_FALSE(is_zero(derivation(c, 0, w, DerivationSide::Right)));
  std::mt19937_64 rng(11);
  CHECK(derivation_biconditional(c, 4, DerivationSide::Left, rng));
  CHECK(derivation_biconditional(c, 4, DerivationSide::Right, rng));
}

TEST_CASE("closed forms for one-orbits") {
  RationalField q;
  for (long e = 1; e <= 3; ++e)
    for (long v : {-1L, 1L, 2L}) {
      auto m = one_orbit_matrix(q, static_cast<int>(e), q.from_int(v));
      long ker = static_cast<long>(m.cols) - static_cast<long>(rank(q, m));
      CHECK(ker == closed_form_kernel_1orbit(e, scalar_class(q, q.from_int(v))));
    }
  // e = 1: 1 + q + q^2 vanishes exactly at primitive cube roots
  auto e3 = std::get<ExtRational>(parse_field("QQ[t]/(t^2+t+1)"));
  ScalarClass s = scalar_class(e3, e3.parse("t"));
  CHECK(s.cube_root);
  CHECK(closed_form_kernel_1orbit(1, s) == 1);
  CHECK(closed_form_kernel_8orbit_bound(1, false) == 2);
}

TEST_CASE("inequality forms") {
  auto direct = [](long long k3, long long m, long long d1, long long d8) {
    return 12 * k3 * d8 + 24 * d1 - k3 * k3 - 30 * k3 + m;
  };
  for (long long d1 = 0; d1 < 5; ++d1)
    for (long long d8 = 0; d8 < 5; ++d8) {
      CHECK(inequality_lhs(6, 1, 4, 0, d1, d8) == direct(4, 0, d1, d8));
      CHECK(inequality_lhs_printed(6, 1, 4, 0, d1, d8) == inequality_lhs(6, 1, 4, 0, d1, d8));
    }
  CHECK(inequality_lhs(3, 1, 2, 0, 0, 3) == 8);
  CHECK(general_inequality(3, 1, 2, 0, 0, 3));
  for (long long e = 1; e <= 4; ++e)
    for (long long k3 = 0; k3 <= 12; ++k3)
      for (long long m = 0; m <= 3; ++m) {
        long long d1 = e * (e * e - 1) / 3, d8 = e * e * (5 * e + 1) / 2;
        CHECK(inequality_lhs(10, e, k3, m, d1, d8) == -e * e * reduced_inequality_minus_one(e, k3, m));
        long long d1b = e * (e * e + 2) / 3, d8b = e * e * (5 * e - 1) / 2;
        CHECK(inequality_lhs(10, e, k3, m, d1b, d8b) == -e * reduced_inequality_other(e, k3, m));
      }
}

TEST_CASE("Hilbert series utilities") {
  CHECK(product_polynomial({{2, 1}, {2, 1}, {3, 1}}) == Series{1, 3, 4, 3, 1});
  CHECK(series_total(product_polynomial({{2, 1}, {2, 1}, {3, 1}})) == 12);
  CHECK(series_product({{0, 1}}, 3) == Series{1, 1, 1, 1});
  CHECK(factor_series({3, 2}, 5) == Series{1, 0, 1, 0, 1, 0});
  auto fs = hilbert_factorizations({1, 3, 4, 3, 1, 0});
  REQUIRE_FALSE(fs.empty());
  CHECK(product_polynomial(fs.front()) == Series{1, 3, 4, 3, 1});
  CHECK(parse_factors(format_factors({{2, 1}, {6, 2}})) == std::vector<HilbertFactor>{{2, 1}, {6, 2}});
  CHECK(hilbert_factorizations({1, 1, 0, 1}).empty());
}
