#include "emosig/pipeline.hpp"

#include <algorithm>
#include <cmath>

#include "emosig/dsp/baseline.hpp"
#include "emosig/dsp/butterworth.hpp"
#include "emosig/dsp/emg.hpp"
#include "emosig/errors.hpp"
#include "emosig/features/extract.hpp"
#include "emosig/util/parallel.hpp"

namespace emosig {

void DspConfig::validate() const {
    if (bands.size() != 5) throw OutOfRange("exactly five EEG bands are required");
    if (filter_order != 2 && filter_order != 4) {
        throw OutOfRange("filter_order must be 2 or 4");
    }
    if (!(emg_band_low_hz > 0.0) || !(emg_band_low_hz < emg_band_high_hz)) {
        throw BadBand("EMG band edges must satisfy 0 < low < high");
    }
    if (!(tonic_cutoff_hz > 0.0)) throw OutOfRange("tonic_cutoff_hz must be positive");
    if (wavelet.levels < 1 || wavelet.levels > 12) {
        throw OutOfRange("wavelet levels must lie in [1, 12]");
    }
    if (wavelet.threshold_scale < 0.0) {
        throw OutOfRange("wavelet threshold_scale must be non-negative");
    }
    if (!(peak_prominence_factor >= 0.0)) {
        throw OutOfRange("peak_prominence_factor must be non-negative");
    }
    if (!(emg_window_ms > 0.0)) throw OutOfRange("emg_window_ms must be positive");
}

namespace {

/// Copy of a series restricted to [start_s, end_s), shifted by -offset.
dsp::DerivedSeries sliced(const dsp::DerivedSeries& series, double start_s, double end_s,
                          double offset) {
    const dsp::IndexRange r = dsp::window_indices(series, start_s, end_s);
    if (r.size() == 0) throw EmptyWindow("window contains no samples");
    dsp::DerivedSeries out;
    out.kind = series.kind;
    out.tag = series.tag;
    out.rate_hz = series.rate_hz;
    out.start_offset_s = series.time_of(r.begin);
    out.values.reserve(r.size());
    for (size_t i = r.begin; i < r.end; ++i) out.values.push_back(series.values[i] - offset);
    return out;
}

dsp::DerivedSeries passthrough_series(const RawTrace& trace, dsp::SeriesKind kind) {
    dsp::DerivedSeries s;
    s.kind = kind;
    s.rate_hz = trace.rate_hz;
    s.start_offset_s = trace.start_offset_s;
    s.values = trace.samples;
    return s;
}

const RawTrace& channel(const std::map<SensorKind, RawTrace>& traces, SensorKind kind) {
    const auto it = traces.find(kind);
    if (it == traces.end()) {
        throw MissingChannel("session lacks channel " + std::string(to_string(kind)));
    }
    const double expected = expected_rate_hz(kind);
    if (std::abs(it->second.rate_hz - expected) > 1e-9 * expected) {
        throw RateMismatch("channel " + std::string(to_string(kind)) + " sampled at " +
                           std::to_string(it->second.rate_hz) + " Hz, expected " +
                           std::to_string(expected));
    }
    it->second.validate();
    return it->second;
}

} // namespace

features::SessionFeatures process_session(const std::string& subject_id,
                                          const std::map<SensorKind, RawTrace>& traces,
                                          const ProtocolTimeline& timeline,
                                          const DspConfig& config) {
    config.validate();
    const std::vector<TrialSegment> segments = segment_session(timeline);

    const RawTrace& eeg = channel(traces, SensorKind::EegRaw);
    const RawTrace& gsr = channel(traces, SensorKind::Gsr);
    const RawTrace& emg1 = channel(traces, SensorKind::EmgCh1);
    const RawTrace& emg2 = channel(traces, SensorKind::EmgCh2);

    // whole-session derivations
    const std::vector<dsp::DerivedSeries> bands = dsp::band_power_all(eeg, config.bands);
    const dsp::DerivedSeries attention =
        passthrough_series(channel(traces, SensorKind::EegAttention), dsp::SeriesKind::Attention);
    const dsp::DerivedSeries meditation = passthrough_series(
        channel(traces, SensorKind::EegMeditation), dsp::SeriesKind::Meditation);

    const dsp::GsrDecomposition decomposition =
        dsp::gsr_decompose(gsr, config.tonic_cutoff_hz);
    const dsp::DerivedSeries denoised =
        dsp::wavelet_denoise(decomposition.phasic, config.wavelet);

    const dsp::DerivedSeries envelope1 = dsp::emg_envelope(
        dsp::bandpass_filter(emg1, config.emg_band_low_hz, config.emg_band_high_hz,
                             config.filter_order),
        config.emg_window_ms);
    const dsp::DerivedSeries envelope2 = dsp::emg_envelope(
        dsp::bandpass_filter(emg2, config.emg_band_low_hz, config.emg_band_high_hz,
                             config.filter_order),
        config.emg_window_ms);

    features::SessionFeatures session;
    session.subject_id = subject_id;

    for (const TrialSegment& trial : segments) {
        const double b0 = trial.baseline_start_s;
        const double b1 = trial.baseline_end_s;
        for (const VideoWindow& video : trial.videos) {
            // features come from the last 30 s of the video, corrected by
            // this trial's baseline mean
            const double w0 = std::max(video.start_s, video.end_s - 30.0);
            const double w1 = video.end_s;

            std::vector<dsp::DerivedSeries> band_slices;
            band_slices.reserve(bands.size());
            for (const dsp::DerivedSeries& s : bands) {
                band_slices.push_back(sliced(s, w0, w1, dsp::window_mean(s, b0, b1)));
            }
            const dsp::DerivedSeries att =
                sliced(attention, w0, w1, dsp::window_mean(attention, b0, b1));
            const dsp::DerivedSeries med =
                sliced(meditation, w0, w1, dsp::window_mean(meditation, b0, b1));

            const dsp::DerivedSeries phasic =
                sliced(decomposition.phasic, w0, w1,
                       dsp::window_mean(decomposition.phasic, b0, b1));
            const dsp::DerivedSeries den =
                sliced(denoised, w0, w1, dsp::window_mean(denoised, b0, b1));
            const dsp::PeakSet peaks = dsp::detect_peaks(den, config.peak_prominence_factor);

            const dsp::DerivedSeries env1 =
                sliced(envelope1, w0, w1, dsp::window_mean(envelope1, b0, b1));
            const dsp::DerivedSeries env2 =
                sliced(envelope2, w0, w1, dsp::window_mean(envelope2, b0, b1));

            const std::vector<double> eeg_block =
                features::eeg_features(band_slices, att, med, w0, w1);
            const std::vector<double> gsr_block =
                features::gsr_features(phasic, den, peaks, w0, w1);
            const std::vector<double> emg_block = features::emg_features(env1, env2, w0, w1);

            features::SessionFeatures::VideoFeatures out;
            out.video_id = video.video_id;
            size_t at = 0;
            for (double v : eeg_block) out.features.values[at++] = v;
            for (double v : gsr_block) out.features.values[at++] = v;
            for (double v : emg_block) out.features.values[at++] = v;
            session.videos.push_back(std::move(out));
        }
    }
    return session;
}

features::SessionFeatures process_manifest(const SessionManifest& manifest,
                                           const DspConfig& config) {
    std::map<SensorKind, RawTrace> traces;
    for (const auto& [kind, path] : manifest.channels) {
        traces[kind] = load_trace(path, kind);
    }
    return process_session(manifest.subject_id, traces, manifest.timeline, config);
}

features::Dataset extract_dataset(const std::vector<SessionManifest>& manifests,
                                  const DspConfig& config, const VideoLabelTable& table,
                                  int threads) {
    std::vector<features::SessionFeatures> sessions(manifests.size());
    util::parallel_for(manifests.size(), threads, [&](size_t i) {
        sessions[i] = process_manifest(manifests[i], config);
    });
    return features::build_dataset(sessions, table);
}

} // namespace emosig
