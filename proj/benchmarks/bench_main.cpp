#include <benchmark/benchmark.h>

#include "braidrack/braiding.hpp"
#include "braidrack/classify.hpp"
#include "braidrack/hurwitz.hpp"
#include "braidrack/io.hpp"
#include "braidrack/nichols.hpp"
#include "braidrack/percolate.hpp"
#include "braidrack/quotient.hpp"
#include "braidrack/rack.hpp"
#include "braidrack/sparse.hpp"

using namespace braidrack;

namespace {

const char* const kRacks[] = {"D3", "T", "A", "C", "Aff(7,3)", "Aff(9,2)"};

void BM_Census(benchmark::State& state) {
  Rack r = preset(kRacks[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(census(r, 3, 1));
  state.SetLabel(kRacks[state.range(0)]);
}
BENCHMARK(BM_Census)->DenseRange(0, 5)->Unit(benchmark::kMicrosecond);

void BM_ImmunityTable(benchmark::State& state) {
  Rack r = preset(kRacks[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(immunity_table(r, 1));
  state.SetLabel(kRacks[state.range(0)]);
}
BENCHMARK(BM_ImmunityTable)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_SparseRankFp(benchmark::State& state) {
  PrimeField f(13);
  auto n = static_cast<std::uint64_t>(state.range(0));
  SparseMatrix<PrimeField> m;
  m.cols = n;
  for (std::uint64_t i = 0; i < n; ++i) {
    std::vector<std::pair<std::uint64_t, std::uint32_t>> e;
    for (std::uint64_t k = 0; k < 4; ++k) e.emplace_back((i * 7 + k * k * 31 + k) % n, static_cast<std::uint32_t>(1 + (i + k) % 12));
    m.rows.push_back(make_sparse(f, std::move(e)));
  }
  for (auto _ : state) benchmark::DoNotOptimize(rank(f, m));
}
BENCHMARK(BM_SparseRankFp)->RangeMultiplier(4)->Range(256, 4096)->Unit(benchmark::kMillisecond);

void BM_GradedDimsT(benchmark::State& state) {
  RationalField q;
  auto c = constant_cocycle(preset("T"), q, q.from_int(-1));
  DimsOptions o;
  o.max_degree = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(graded_dims(c, o));
}
BENCHMARK(BM_GradedDimsT)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

void BM_CubicKernelC(benchmark::State& state) {
  RationalField q;
  auto c = cocycle_preset("C-minus", preset("C"), q);
  for (auto _ : state) benchmark::DoNotOptimize(cubic_kernel(c, 1));
}
BENCHMARK(BM_CubicKernelC)->Unit(benchmark::kMillisecond);

void BM_QuotientD3Char2(benchmark::State& state) {
  auto f = std::get<ExtPrime>(parse_field("Fp(2)[t]/(t^2+t+1)"));
  auto c = cocycle_preset("d3char2", preset("D3"), f);
  auto rels = build_relations(relation_preset("d3char2"), f, 3);
  for (auto _ : state) benchmark::DoNotOptimize(quotient_dims(Presentation<ExtPrime>{c, rels}));
}
BENCHMARK(BM_QuotientD3Char2)->Unit(benchmark::kMillisecond);

void BM_ClassifyDegree(benchmark::State& state) {
  SearchSpec spec;
  spec.degrees = {static_cast<int>(state.range(0))};
  spec.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(search_racks(spec));
}
BENCHMARK(BM_ClassifyDegree)->Arg(2)->Arg(3)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
