#include <benchmark/benchmark.h>

#include "joinortho/classifier.hpp"
#include "joinortho/enumeration.hpp"

using namespace joinortho;

namespace {

void BM_GaleRyserConstruct(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    // half-full square demands, always feasible
    IntTuple r = IntTuple::repeated(n / 2, n);
    IntTuple c = IntTuple::repeated(n / 2, n);
    for (auto _ : state) {
        BinaryMatrix M = gale_ryser_construct(r, c);
        benchmark::DoNotOptimize(M);
    }
}
BENCHMARK(BM_GaleRyserConstruct)->Arg(8)->Arg(16)->Arg(32);

void BM_StrongSuitability(benchmark::State& state) {
    IntTuple m{4, 4, 3, 3, 2};
    IntTuple n{4, 3, 3, 2, 2, 2, 1, 1};
    for (auto _ : state) {
        SuitabilityReport rep = strongly_suitable(m, n);
        benchmark::DoNotOptimize(rep);
    }
}
BENCHMARK(BM_StrongSuitability);

void BM_ExactSearchMember(benchmark::State& state) {
    IntTuple m{2, 2, 2};
    IntTuple n{3, 1, 1, 1};
    for (auto _ : state) {
        OracleOutcome oc = dtilde_exact(m, n, kUnlimitedBudget);
        benchmark::DoNotOptimize(oc);
    }
}
BENCHMARK(BM_ExactSearchMember);

void BM_ExactSearchNonMember(benchmark::State& state) {
    IntTuple m{2, 2, 2, 2};
    IntTuple n{3, 1, 1, 1, 1, 1};
    for (auto _ : state) {
        OracleOutcome oc = d_exact(m, n, kUnlimitedBudget);
        benchmark::DoNotOptimize(oc);
    }
}
BENCHMARK(BM_ExactSearchNonMember);

void BM_ClassifyGrid(benchmark::State& state) {
    PairBounds bounds;
    bounds.max_total = static_cast<int>(state.range(0));
    bounds.max_l = 4;
    auto pairs = sorted_pairs(bounds);
    for (auto _ : state) {
        for (const auto& [m, n] : pairs) {
            Verdict v = classify(m, n);
            benchmark::DoNotOptimize(v);
        }
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * pairs.size()));
}
BENCHMARK(BM_ClassifyGrid)->Arg(4)->Arg(6);

} // namespace

int main(int argc, char** argv) {
    benchmark::Initialize(&argc, argv);
    if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
    benchmark::RunSpecifiedBenchmarks();
    benchmark::Shutdown();
    return 0;
}
