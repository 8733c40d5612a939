#include <benchmark/benchmark.h>

#include "emosig/classify/classifier.hpp"
#include "emosig/eval/loo.hpp"
#include "emosig/util/rng.hpp"

namespace {

emosig::features::Dataset synthetic_dataset(size_t n, size_t dim, double separation) {
    emosig::util::Rng rng(7);
    emosig::features::Dataset ds;
    ds.mask = emosig::features::SensorMask{true, true, true};
    for (size_t i = 0; i < n; ++i) {
        emosig::features::LabeledInstance inst;
        inst.subject_id = "s" + std::to_string(i / 8);
        inst.video_id = static_cast<int>(i);
        const bool high = i % 2 == 1;
        inst.features.resize(dim);
        for (double& v : inst.features) {
            v = rng.normal() + (high ? separation : 0.0);
        }
        inst.valence = high ? emosig::Label::High : emosig::Label::Low;
        inst.arousal = inst.valence;
        ds.instances.push_back(std::move(inst));
    }
    return ds;
}

void bench_train(benchmark::State& state, emosig::classify::Algorithm algorithm) {
    const auto ds = synthetic_dataset(152, 58, 0.3);
    emosig::classify::ClassifierSpec spec;
    spec.algorithm = algorithm;
    for (auto _ : state) {
        auto model = emosig::classify::train(spec, ds, emosig::classify::Target::Arousal);
        benchmark::DoNotOptimize(model);
    }
}

void BM_TrainNaiveBayes(benchmark::State& state) {
    bench_train(state, emosig::classify::Algorithm::NaiveBayes);
}
BENCHMARK(BM_TrainNaiveBayes);

void BM_TrainTree(benchmark::State& state) {
    bench_train(state, emosig::classify::Algorithm::Tree);
}
BENCHMARK(BM_TrainTree);

void BM_TrainSvm(benchmark::State& state) {
    bench_train(state, emosig::classify::Algorithm::Svm);
}
BENCHMARK(BM_TrainSvm);

void BM_LooEvaluateTree(benchmark::State& state) {
    const auto ds = synthetic_dataset(static_cast<size_t>(state.range(0)), 13, 0.3);
    emosig::classify::ClassifierSpec spec;
    spec.algorithm = emosig::classify::Algorithm::Tree;
    for (auto _ : state) {
        auto report = emosig::eval::loo_evaluate(spec, ds, emosig::classify::Target::Arousal);
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK(BM_LooEvaluateTree)->Arg(64)->Arg(152);

} // namespace
