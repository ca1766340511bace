#include <random>

#include "braidrack/error.hpp"
#include "braidrack/field.hpp"
#include "braidrack/sparse.hpp"
#include "doctest.h"
#include "oracle.hpp"

using namespace braidrack;

namespace {

// Random sparse integer matrix with a planted low rank part.
std::vector<std::vector<long>> random_matrix(std::mt19937_64& rng, int rows, int cols, int density_pct) {
  std::uniform_int_distribution<int> pct(0, 99), val(-3, 3);
  std::vector<std::vector<long>> m(static_cast<std::size_t>(rows), std::vector<long>(static_cast<std::size_t>(cols), 0));
  for (auto& row : m)
    for (auto& v : row)
      if (pct(rng) < density_pct) v = val(rng);
  // duplicate some rows as combinations of others
  for (int r = rows / 2; r < rows; r += 2) {
    auto& target = m[static_cast<std::size_t>(r)];
    const auto& a = m[static_cast<std::size_t>(r - rows / 2)];
    const auto& b = m[static_cast<std::size_t>(r - rows / 2 + 1)];
    for (int c = 0; c < cols; ++c) target[static_cast<std::size_t>(c)] = 2 * a[static_cast<std::size_t>(c)] - b[static_cast<std::size_t>(c)];
  }
  return m;
}

template <class F>
SparseMatrix<F> to_sparse(const F& f, const std::vector<std::vector<long>>& m) {
  std::vector<std::vector<typename F::Element>> rows;
  for (const auto& row : m) {
    std::vector<typename F::Element> r;
    for (long v : row) r.push_back(f.from_int(v));
    rows.push_back(r);
  }
  return dense_matrix(f, rows);
}

}  // namespace

TEST_CASE("prime field arithmetic") {
  PrimeField f(7);
  for (std::uint32_t a = 1; a < 7; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
  CHECK(f.from_int(-1) == 6);
  CHECK(f.parse("-2") == 5);
  CHECK(f.pow(3, 6) == 1);
  CHECK_THROWS_AS(f.inv(0), Error);
  CHECK_THROWS_AS(PrimeField(8), Error);
}

TEST_CASE("quotient rings") {
  auto e = std::get<ExtRational>(parse_field("QQ[t]/(t^2+t+1)"));
  auto t = e.parse("t");
  // t^3 = 1 and 1 + t + t^2 = 0
  CHECK(e.equal(e.mul(t, e.mul(t, t)), e.one()));
  CHECK(e.is_zero(e.add(e.one(), e.add(t, e.mul(t, t)))));
  CHECK(e.equal(e.mul(t, e.inv(t)), e.one()));
  CHECK(e.format(e.parse("-q^2")) == "t+1");
  auto f4 = std::get<ExtPrime>(parse_field("Fp(2)[t]/(t^2+t+1)"));
  for (std::uint32_t a = 0; a < 2; ++a)
    for (std::uint32_t b = 0; b < 2; ++b) {
      if (!a && !b) continue;
      auto x = f4.zero();
      x[0] = a;
      x[1] = b;
      CHECK(f4.equal(f4.mul(x, f4.inv(x)), f4.one()));
    }
  CHECK(field_spec(parse_field("Fp(5)")) == "Fp(5)");
  CHECK(field_characteristic(parse_field("Fp(2)[t]/(t^2+t+1)")) == 2);
  CHECK_THROWS_AS(parse_field("RR"), Error);
}

TEST_CASE("sparse rank matches dense elimination over F_p") {
  std::mt19937_64 rng(1);
  for (std::uint32_t p : {2u, 3u, 7u, 13u}) {
    PrimeField f(p);
    for (int trial = 0; trial < 20; ++trial) {
      auto m = random_matrix(rng, 24, 30, 15 + trial * 3);
      std::vector<std::vector<std::int64_t>> dense;
      for (const auto& row : m) dense.emplace_back(row.begin(), row.end());
      CAPTURE(p);
      CHECK(static_cast<long>(rank(f, to_sparse(f, m))) == oracle::rank_mod(dense, p));
    }
  }
}

TEST_CASE("sparse rank and kernel over QQ") {
  std::mt19937_64 rng(2);
  RationalField q;
  for (int trial = 0; trial < 20; ++trial) {
    auto m = random_matrix(rng, 20, 26, 20 + trial * 2);
    std::vector<std::vector<mpq_class>> dense;
    for (const auto& row : m) {
      std::vector<mpq_class> r;
      for (long v : row) r.emplace_back(v);
      dense.push_back(r);
    }
    auto sm = to_sparse(q, m);
    long r = static_cast<long>(rank(q, sm));
    CHECK(r == oracle::rank_rational(dense));
    auto ker = kernel_basis(q, sm);
    CHECK(static_cast<long>(ker.size()) == 26 - r);
    for (const auto& v : ker)
      for (const auto& x : apply(q, sm, v)) CHECK(sgn(x) == 0);
  }
}

TEST_CASE("echelon insertion reports dependence") {
  PrimeField f(5);
  Echelon<PrimeField> ech(f);
  CHECK(ech.insert(make_sparse(f, {{0, 1u}, {2, 3u}})));
  CHECK(ech.insert(make_sparse(f, {{1, 1u}, {2, 1u}})));
  CHECK_FALSE(ech.insert(make_sparse(f, {{0, 2u}, {1, 3u}, {2, 4u}})));  // 2 r1 + 3 r2 = (2,3,9) = (2,3,4)
  CHECK(ech.rank() == 2);
  CHECK(ech.reduce_full(make_sparse(f, {{0, 1u}, {2, 3u}})).empty());
}
