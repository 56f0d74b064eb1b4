#include <benchmark/benchmark.h>

#include "hodgekit/elliptic_periods.hpp"
#include "hodgekit/hodge_structure.hpp"
#include "hodgekit/nc_hodge.hpp"

using namespace hodgekit;

namespace {

HodgeDecomposition elliptic() {
  const GaussianRational one = 1, i = GaussianRational::i();
  return {1, 2,
          {{{1, 0}, Subspace::span(QiMatrix::from_columns({{one, i}}, 2))},
           {{0, 1}, Subspace::span(QiMatrix::from_columns({{one, -i}}, 2))}}};
}

// Rank 2^k, weight k.
HodgeDecomposition elliptic_power(int k) {
  HodgeDecomposition d = elliptic();
  for (int n = 1; n < k; ++n) d = tensor(d, elliptic());
  return d;
}

QiMatrix hilbert_like(std::size_t n) {
  QiMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = GaussianRational(Rational(1) / Rational(static_cast<long>(r + c + 1)), Rational(static_cast<long>(r) - static_cast<long>(c)));
  return m;
}

void BM_Rref(benchmark::State& state) {
  const QiMatrix m = hilbert_like(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_Rref)->Arg(4)->Arg(8)->Arg(16);

void BM_DecompositionToFiltration(benchmark::State& state) {
  const HodgeDecomposition d = elliptic_power(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(decomposition_to_filtration(d));
}
BENCHMARK(BM_DecompositionToFiltration)->DenseRange(1, 3);

void BM_FiltrationToDecomposition(benchmark::State& state) {
  const HodgeFiltration f = decomposition_to_filtration(elliptic_power(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(filtration_to_decomposition(f));
}
BENCHMARK(BM_FiltrationToDecomposition)->DenseRange(1, 3);

void BM_DecompositionToRepresentation(benchmark::State& state) {
  const HodgeDecomposition d = elliptic_power(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(decomposition_to_representation(d));
}
BENCHMARK(BM_DecompositionToRepresentation)->DenseRange(1, 3);

void BM_ExteriorPower(benchmark::State& state) {
  const HodgeDecomposition d = elliptic_power(2);
  for (auto _ : state) benchmark::DoNotOptimize(exterior_power(d, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_ExteriorPower)->DenseRange(1, 3);

void BM_Periods(benchmark::State& state) {
  const WeierstrassCurve c{-1, 2};
  for (auto _ : state) benchmark::DoNotOptimize(periods(c));
}
BENCHMARK(BM_Periods);

void BM_Analyze(benchmark::State& state) {
  const WeierstrassCurve c{7, -3};
  for (auto _ : state) benchmark::DoNotOptimize(analyze(c));
}
BENCHMARK(BM_Analyze);

void BM_Reduce(benchmark::State& state) {
  const TauPoint start{{0.1234L, 1e-3L}, SL2Z::identity()};
  for (auto _ : state) benchmark::DoNotOptimize(reduce_to_fundamental_domain(start));
}
BENCHMARK(BM_Reduce);

void BM_JOfTau(benchmark::State& state) {
  const Complex tau(0.3L, 0.9L);
  for (auto _ : state) benchmark::DoNotOptimize(j_of_tau(tau));
}
BENCHMARK(BM_JOfTau);

void BM_NcHodgeCheck(benchmark::State& state) {
  const SL2Rep rep = parse_sl2_rep("Sym(4)*conj(Sym(3))x2");
  for (auto _ : state) benchmark::DoNotOptimize(nc_hodge_check(rep));
}
BENCHMARK(BM_NcHodgeCheck);

}  // namespace

BENCHMARK_MAIN();
