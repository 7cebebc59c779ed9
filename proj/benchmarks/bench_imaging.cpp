#include <firank/imaging/features.hpp>

#include <benchmark/benchmark.h>

#include <cmath>

namespace {

firank::imaging::LesionImage disk_lesion(int size) {
    firank::Matrix px(size, size);
    firank::imaging::Mask mask = firank::imaging::Mask::Zero(size, size);
    const double c = size / 2.0, r = size / 3.0;
    for (int i = 0; i < size; ++i) {
        for (int j = 0; j < size; ++j) {
            px(i, j) = 128.0 + 60.0 * std::sin(0.3 * i) * std::cos(0.2 * j);
            if ((i - c) * (i - c) + (j - c) * (j - c) <= r * r) mask(i, j) = 1;
        }
    }
    return {px, mask};
}

void BM_ExtractAll(benchmark::State& state) {
    const auto lesion = disk_lesion(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto f = firank::imaging::extract_all(lesion);
        benchmark::DoNotOptimize(f.values.data());
    }
}
BENCHMARK(BM_ExtractAll)->Arg(64)->Arg(256)->Arg(512);

}  // namespace
