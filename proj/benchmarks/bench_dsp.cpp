#include <benchmark/benchmark.h>

#include "emosig/dsp/butterworth.hpp"
#include "emosig/dsp/gsr.hpp"
#include "emosig/dsp/spectral.hpp"
#include "emosig/util/rng.hpp"

namespace {

emosig::RawTrace noise_trace(emosig::SensorKind kind, double rate, double seconds) {
    emosig::util::Rng rng(42);
    emosig::RawTrace t;
    t.kind = kind;
    t.rate_hz = rate;
    t.samples.resize(static_cast<size_t>(seconds * rate));
    for (double& v : t.samples) v = rng.normal();
    return t;
}

void BM_BandpassFilter(benchmark::State& state) {
    const auto trace = noise_trace(emosig::SensorKind::EmgCh1, 512.0,
                                   static_cast<double>(state.range(0)));
    for (auto _ : state) {
        auto out = emosig::dsp::bandpass_filter(trace, 20.0, 125.0, 4);
        benchmark::DoNotOptimize(out);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(trace.samples.size()));
}
BENCHMARK(BM_BandpassFilter)->Arg(60)->Arg(600);

void BM_BandPowerAll(benchmark::State& state) {
    const auto trace = noise_trace(emosig::SensorKind::EegRaw, 512.0,
                                   static_cast<double>(state.range(0)));
    const std::vector<emosig::dsp::BandSpec> bands(emosig::dsp::default_bands().begin(),
                                                   emosig::dsp::default_bands().end());
    for (auto _ : state) {
        auto out = emosig::dsp::band_power_all(trace, bands);
        benchmark::DoNotOptimize(out);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(trace.samples.size()));
}
BENCHMARK(BM_BandPowerAll)->Arg(60)->Arg(600);

void BM_WaveletDenoise(benchmark::State& state) {
    const auto trace = noise_trace(emosig::SensorKind::Gsr, 128.0,
                                   static_cast<double>(state.range(0)));
    const auto parts = emosig::dsp::gsr_decompose(trace);
    for (auto _ : state) {
        auto out = emosig::dsp::wavelet_denoise(parts.phasic);
        benchmark::DoNotOptimize(out);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(trace.samples.size()));
}
BENCHMARK(BM_WaveletDenoise)->Arg(64)->Arg(512);

} // namespace

BENCHMARK_MAIN();
