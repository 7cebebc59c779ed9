#include <firank/core/synthetic.hpp>
#include <firank/evaluation/cv.hpp>
#include <firank/evaluation/folds.hpp>
#include <firank/evaluation/search.hpp>
#include <firank/svm/linear_svm.hpp>

#include <benchmark/benchmark.h>

namespace {

firank::Dataset planted(std::size_t n) {
    firank::SynthSpec spec;
    spec.samples = n;
    return firank::make_synthetic_dataset(spec);
}

void BM_Train(benchmark::State& state) {
    const auto data = planted(static_cast<std::size_t>(state.range(0)));
    const auto p = state.range(1);
    const firank::svm::RowMatrix x = data.features().leftCols(p);
    for (auto _ : state) {
        auto m = firank::svm::train(x, data.labels());
        benchmark::DoNotOptimize(m.bias);
    }
}
BENCHMARK(BM_Train)->Args({180, 1})->Args({180, 3})->Args({180, 8})->Args({1000, 8});

void BM_CvAuc(benchmark::State& state) {
    const auto data = planted(200);
    const auto folds = firank::evaluation::stratified_folds(data.labels(), 10, firank::RngSeed{42});
    const auto prepared = firank::evaluation::prepare_folds(data, folds);
    firank::evaluation::FeatureSubset subset;
    for (int j = 1; j <= state.range(0); ++j) subset.push_back(j);
    for (auto _ : state) {
        auto r = firank::evaluation::evaluate_subset(prepared, subset, {});
        benchmark::DoNotOptimize(r.mean);
    }
}
BENCHMARK(BM_CvAuc)->DenseRange(1, 8, 7);

void BM_Search(benchmark::State& state) {
    const auto data = planted(200);
    const auto folds = firank::evaluation::stratified_folds(data.labels(), 10, firank::RngSeed{42});
    firank::evaluation::SearchOptions opt;
    opt.kmax = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto r = firank::evaluation::exhaustive_search(data, folds, opt);
        benchmark::DoNotOptimize(r.best_mean_auc);
    }
}
BENCHMARK(BM_Search)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace
