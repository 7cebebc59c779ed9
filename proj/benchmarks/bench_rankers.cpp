#include <firank/core/synthetic.hpp>
#include <firank/rankers/rank.hpp>

#include <benchmark/benchmark.h>

namespace {

void BM_Rank(benchmark::State& state) {
    firank::SynthSpec spec;
    spec.samples = 163;
    const auto data = firank::make_synthetic_dataset(spec);
    const auto method = firank::rankers::kAllMethods[state.range(0)];
    state.SetLabel(std::string(firank::rankers::method_id(method)));
    for (auto _ : state) {
        auto r = firank::rankers::rank(data, method);
        benchmark::DoNotOptimize(r.order.data());
    }
}
BENCHMARK(BM_Rank)->DenseRange(0, 13);

}  // namespace
