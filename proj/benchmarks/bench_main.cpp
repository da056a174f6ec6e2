#include <benchmark/benchmark.h>

#include "tridyck/aqt.hpp"
#include "tridyck/lattice.hpp"
#include "tridyck/schur.hpp"
#include "tridyck/simsym.hpp"

using namespace tridyck;

namespace {

const std::vector<Partition> kShapes{{4, 2, 1}, {5, 3, 1}, {6, 4, 2, 1}, {7, 5, 3, 1}, {8, 6, 4, 2, 1}};

void BM_BuildLattice(benchmark::State& st) {
    const auto& lam = kShapes[static_cast<std::size_t>(st.range(0))];
    for (auto _ : st) benchmark::DoNotOptimize(Lattice(lam).interval_count());
    st.SetLabel(lam.str());
}
BENCHMARK(BM_BuildLattice)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_IntervalPolynomial(benchmark::State& st) {
    const auto& lam = kShapes[static_cast<std::size_t>(st.range(0))];
    const Lattice L(lam);
    const auto theta = top_down_tableau(lam);
    for (auto _ : st) benchmark::DoNotOptimize(interval_polynomial(L, theta));
    st.SetLabel(lam.str());
}
BENCHMARK(BM_IntervalPolynomial)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_ALambda(benchmark::State& st) {
    const auto lams = enumerate_triangular_partitions(static_cast<int>(st.range(0)));
    for (auto _ : st)
        for (const auto& lam : lams) benchmark::DoNotOptimize(decompose_schur_2var(a_lambda_polynomial(lam)));
}
BENCHMARK(BM_ALambda)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_LiftR1(benchmark::State& st) {
    const auto& lam = kShapes[static_cast<std::size_t>(st.range(0))];
    const auto p = interval_polynomial(lam, top_down_tableau(lam));
    for (auto _ : st) benchmark::DoNotOptimize(lift_r1(p));
    st.SetLabel(lam.str());
}
BENCHMARK(BM_LiftR1)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_SimSym(benchmark::State& st) {
    const Partition lam{static_cast<int>(st.range(0)), 3};
    for (auto _ : st) benchmark::DoNotOptimize(enumerate_sim_sym(lam).size());
}
BENCHMARK(BM_SimSym)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
