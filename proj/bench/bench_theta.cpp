#include <benchmark/benchmark.h>

#include <vector>

#include "g2/sampling.hpp"
#include "g2/theta.hpp"

namespace {

std::vector<g2::Point2> points(std::size_t n) {
    const g2::Stream s(1);
    std::vector<g2::Point2> pts;
    for (std::size_t i = 0; i < n; ++i) pts.push_back(g2::sample_point(s.split(i)));
    return pts;
}

void BM_batch_serial(benchmark::State& st) {
    const auto pts = points(static_cast<std::size_t>(st.range(0)));
    const auto tau = g2::PeriodMatrix::standard();
    for (auto _ : st) benchmark::DoNotOptimize(g2::theta2_batch_serial(g2::ch("10;11"), pts, tau));
    st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_batch_omp(benchmark::State& st) {
    const auto pts = points(static_cast<std::size_t>(st.range(0)));
    const auto tau = g2::PeriodMatrix::standard();
    for (auto _ : st) benchmark::DoNotOptimize(g2::theta2_batch(g2::ch("10;11"), pts, tau));
    st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_table(benchmark::State& st) {
    const auto tau = g2::PeriodMatrix::standard();
    const g2::Point2 p{{0.2, 0.1}, {-0.3, 0.05}};
    for (auto _ : st) benchmark::DoNotOptimize(g2::theta2_all(p, tau));
}

}  // namespace

BENCHMARK(BM_batch_serial)->Arg(256)->Arg(4096);
BENCHMARK(BM_batch_omp)->Arg(256)->Arg(4096);
BENCHMARK(BM_table);
BENCHMARK_MAIN();
