#include "emosig/synth/generate.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>

#include "emosig/dsp/butterworth.hpp"
#include "emosig/dsp/spectral.hpp"
#include "emosig/errors.hpp"
#include "emosig/util/rng.hpp"

namespace emosig::synth {

namespace {

// generator shape constants
constexpr double kScrBaseRatePerMin = 2.0;
constexpr double kScrAmplitudeUs = 0.8;  // +-25% jitter
constexpr double kScrRiseS = 1.0;
constexpr double kScrDecayS = 3.0;
constexpr double kGsrTonicBaseUs = 5.0;
constexpr double kGsrNoiseUs = 0.01;
constexpr double kEmgBaselineRmsMv = 0.05;
constexpr double kEmgBurstPerMin = 6.0;
constexpr double kEmgBurstFactor = 4.0; // burst RMS relative to baseline
constexpr double kEmgNoiseMv = 0.005;
constexpr double kEegNoiseUv = 2.0;

// per-band EEG RMS in uV: alpha, beta, gamma, delta, theta
constexpr double kEegBandRmsUv[5] = {15.0, 8.0, 4.0, 20.0, 10.0};

struct LabelWindows {
    std::vector<std::pair<double, double>> high_arousal;
    std::vector<std::pair<double, double>> high_valence;
    std::vector<std::pair<double, double>> videos; // all video windows
};

LabelWindows label_windows(const ProtocolTimeline& timeline, const VideoLabelTable& table) {
    LabelWindows w;
    for (const TrialSegment& seg : segment_session(timeline)) {
        for (const VideoWindow& video : seg.videos) {
            const VideoLabels labels = lookup_video_labels(table, video.video_id);
            w.videos.emplace_back(video.start_s, video.end_s);
            if (labels.arousal == Label::High) {
                w.high_arousal.emplace_back(video.start_s, video.end_s);
            }
            if (labels.valence == Label::High) {
                w.high_valence.emplace_back(video.start_s, video.end_s);
            }
        }
    }
    return w;
}

bool inside(const std::vector<std::pair<double, double>>& windows, double t) {
    for (const auto& [a, b] : windows) {
        if (t >= a && t < b) return true;
    }
    return false;
}

std::vector<double> white_noise(util::Rng& rng, size_t n) {
    std::vector<double> x(n);
    for (double& v : x) v = rng.normal();
    return x;
}

void rescale_rms(std::vector<double>& x, double target_rms) {
    double acc = 0.0;
    for (double v : x) acc += v * v;
    const double rms = std::sqrt(acc / static_cast<double>(x.size()));
    if (rms <= 0.0) return;
    const double k = target_rms / rms;
    for (double& v : x) v *= k;
}

RawTrace make_trace(SensorKind kind, double rate, std::vector<double> samples) {
    RawTrace t;
    t.kind = kind;
    t.rate_hz = rate;
    t.start_offset_s = 0.0;
    t.samples = std::move(samples);
    return t;
}

RawTrace synth_eeg(util::Rng& rng, double duration_s, const LabelWindows& windows,
                   const ModulationSpec& spec) {
    const double rate = expected_rate_hz(SensorKind::EegRaw);
    const auto n = static_cast<size_t>(std::llround(duration_s * rate));
    std::vector<double> eeg(n, 0.0);

    const auto& bands = dsp::default_bands();
    const double alpha_amp = std::sqrt(1.0 + spec.valence_alpha_gain);
    for (size_t b = 0; b < bands.size(); ++b) {
        std::vector<double> component = white_noise(rng, n);
        const dsp::SosChain sos =
            dsp::design_bandpass(bands[b].low_hz, bands[b].high_hz, rate, 4);
        component = dsp::filtfilt(sos, component, 12);
        rescale_rms(component, kEegBandRmsUv[b]);
        const bool is_alpha = bands[b].name == "alpha";
        for (size_t i = 0; i < n; ++i) {
            double v = component[i];
            if (is_alpha && alpha_amp != 1.0 &&
                inside(windows.high_valence, static_cast<double>(i) / rate)) {
                v *= alpha_amp;
            }
            eeg[i] += v;
        }
    }
    for (size_t i = 0; i < n; ++i) eeg[i] += spec.noise_level * kEegNoiseUv * rng.normal();
    return make_trace(SensorKind::EegRaw, rate, std::move(eeg));
}

RawTrace synth_walk(util::Rng& rng, SensorKind kind, double duration_s) {
    const double rate = expected_rate_hz(kind);
    const auto n = static_cast<size_t>(std::llround(duration_s * rate));
    std::vector<double> x(n);
    double level = 50.0;
    for (size_t i = 0; i < n; ++i) {
        level = std::clamp(level + 4.0 * rng.normal(), 0.0, 100.0);
        x[i] = level;
    }
    return make_trace(kind, rate, std::move(x));
}

void add_scr_pulse(std::vector<double>& x, double rate, double onset_s, double amplitude) {
    // bi-exponential, normalized to peak at `amplitude`
    static const double peak_t =
        std::log(kScrDecayS / kScrRiseS) * kScrRiseS * kScrDecayS / (kScrDecayS - kScrRiseS);
    static const double peak_v = std::exp(-peak_t / kScrDecayS) - std::exp(-peak_t / kScrRiseS);
    const double k = amplitude / peak_v;
    const auto start = static_cast<size_t>(std::ceil(onset_s * rate));
    const auto stop = std::min(
        x.size(), static_cast<size_t>(std::ceil((onset_s + 8.0 * kScrDecayS) * rate)));
    for (size_t i = start; i < stop; ++i) {
        const double t = static_cast<double>(i) / rate - onset_s;
        x[i] += k * (std::exp(-t / kScrDecayS) - std::exp(-t / kScrRiseS));
    }
}

RawTrace synth_gsr(util::Rng& rng, double duration_s, const LabelWindows& windows,
                   const ModulationSpec& spec) {
    const double rate = expected_rate_hz(SensorKind::Gsr);
    const auto n = static_cast<size_t>(std::llround(duration_s * rate));

    const double drift_phase = rng.uniform() * 2.0 * std::numbers::pi;
    const double drift_slope = (rng.uniform() - 0.5) * 6e-4; // uS per second
    std::vector<double> x(n);
    for (size_t i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) / rate;
        x[i] = kGsrTonicBaseUs + 0.4 * std::sin(2.0 * std::numbers::pi * t / 300.0 + drift_phase) +
               drift_slope * t;
    }

    // piecewise-constant Poisson pulse process: base rate everywhere, raised
    // inside High-arousal videos
    std::vector<double> boundaries = {0.0, duration_s};
    for (const auto& [a, b] : windows.high_arousal) {
        boundaries.push_back(a);
        boundaries.push_back(b);
    }
    std::sort(boundaries.begin(), boundaries.end());
    for (size_t s = 0; s + 1 < boundaries.size(); ++s) {
        const double a = boundaries[s], b = boundaries[s + 1];
        if (b - a <= 0.0) continue;
        const double mid = 0.5 * (a + b);
        double per_min = kScrBaseRatePerMin;
        if (inside(windows.high_arousal, mid)) per_min += spec.arousal_gsr_gain;
        const double lambda = per_min / 60.0;
        if (lambda <= 0.0) continue;
        double t = a + rng.exponential(lambda);
        while (t < b) {
            const double amplitude = kScrAmplitudeUs * (0.75 + 0.5 * rng.uniform());
            add_scr_pulse(x, rate, t, amplitude);
            t += rng.exponential(lambda);
        }
    }

    for (size_t i = 0; i < n; ++i) x[i] += spec.noise_level * kGsrNoiseUs * rng.normal();
    return make_trace(SensorKind::Gsr, rate, std::move(x));
}

RawTrace synth_emg(util::Rng& rng, SensorKind kind, double duration_s,
                   const LabelWindows& windows, const ModulationSpec& spec) {
    const double rate = expected_rate_hz(kind);
    const auto n = static_cast<size_t>(std::llround(duration_s * rate));

    const dsp::SosChain sos = dsp::design_bandpass(20.0, 125.0, rate, 4);
    std::vector<double> baseline = dsp::filtfilt(sos, white_noise(rng, n), 12);
    rescale_rms(baseline, kEmgBaselineRmsMv);
    std::vector<double> burst_noise = dsp::filtfilt(sos, white_noise(rng, n), 12);
    rescale_rms(burst_noise, kEmgBaselineRmsMv);

    // raised-cosine burst envelopes inside video windows
    std::vector<double> envelope(n, 0.0);
    const double lambda = kEmgBurstPerMin / 60.0;
    for (const auto& [a, b] : windows.videos) {
        const bool high = inside(windows.high_arousal, 0.5 * (a + b));
        const double scale = kEmgBurstFactor * (high ? 1.0 + spec.arousal_emg_gain : 1.0);
        double t = a + rng.exponential(lambda);
        while (t < b) {
            const double width = 0.4 + 0.8 * rng.uniform();
            const auto start = static_cast<size_t>(std::ceil(t * rate));
            const auto stop =
                std::min(n, static_cast<size_t>(std::ceil((t + width) * rate)));
            for (size_t i = start; i < stop; ++i) {
                const double phase = (static_cast<double>(i) / rate - t) / width;
                envelope[i] = std::max(
                    envelope[i],
                    scale * 0.5 * (1.0 - std::cos(2.0 * std::numbers::pi * phase)));
            }
            t += rng.exponential(lambda);
        }
    }

    std::vector<double> x(n);
    for (size_t i = 0; i < n; ++i) {
        x[i] = baseline[i] + envelope[i] * burst_noise[i] +
               spec.noise_level * kEmgNoiseMv * rng.normal();
    }
    return make_trace(kind, rate, std::move(x));
}

} // namespace

void ModulationSpec::validate() const {
    for (const double g : {arousal_gsr_gain, arousal_emg_gain, valence_alpha_gain}) {
        if (!std::isfinite(g)) throw OutOfRange("modulation gains must be finite");
    }
    if (arousal_gsr_gain < 0.0 || arousal_emg_gain < 0.0) {
        throw OutOfRange("arousal gains must be non-negative");
    }
    if (!(noise_level > 0.0) || !std::isfinite(noise_level)) {
        throw OutOfRange("noise_level must be positive");
    }
}

std::map<SensorKind, RawTrace> generate_session(const std::string& subject_id,
                                                const ProtocolTimeline& timeline,
                                                const VideoLabelTable& table,
                                                const ModulationSpec& spec) {
    spec.validate();
    timeline.validate();
    const LabelWindows windows = label_windows(timeline, table);
    const double duration = timeline.session_duration_s();
    const uint64_t base = util::mix64(spec.seed, util::fnv1a64(subject_id));

    auto stream = [base](uint64_t channel) { return util::Rng(util::mix64(base, channel)); };

    std::map<SensorKind, RawTrace> traces;
    {
        util::Rng rng = stream(1);
        traces[SensorKind::EegRaw] = synth_eeg(rng, duration, windows, spec);
    }
    {
        util::Rng rng = stream(2);
        traces[SensorKind::EegAttention] = synth_walk(rng, SensorKind::EegAttention, duration);
    }
    {
        util::Rng rng = stream(3);
        traces[SensorKind::EegMeditation] = synth_walk(rng, SensorKind::EegMeditation, duration);
    }
    {
        util::Rng rng = stream(4);
        traces[SensorKind::Gsr] = synth_gsr(rng, duration, windows, spec);
    }
    {
        util::Rng rng = stream(5);
        traces[SensorKind::EmgCh1] = synth_emg(rng, SensorKind::EmgCh1, duration, windows, spec);
    }
    {
        util::Rng rng = stream(6);
        traces[SensorKind::EmgCh2] = synth_emg(rng, SensorKind::EmgCh2, duration, windows, spec);
    }
    return traces;
}

std::filesystem::path write_session(const std::filesystem::path& dir,
                                    const std::string& subject_id,
                                    const std::map<SensorKind, RawTrace>& traces,
                                    const ProtocolTimeline& timeline) {
    const std::filesystem::path session_dir = dir / subject_id;
    std::filesystem::create_directories(session_dir);

    SessionManifest manifest;
    manifest.subject_id = subject_id;
    manifest.timeline = timeline;
    manifest.session_start = "1970-01-01T00:00:00Z";
    for (const auto& [kind, trace] : traces) {
        const std::string filename = std::string(to_string(kind)) + ".csv";
        save_trace(session_dir / filename, trace);
        manifest.channels[kind] = filename;
    }

    const std::filesystem::path manifest_path = session_dir / "manifest.json";
    std::ofstream out(manifest_path);
    if (!out) throw Error("cannot write manifest: " + manifest_path.string());
    out << serialize_manifest(manifest);
    return manifest_path;
}

} // namespace emosig::synth
