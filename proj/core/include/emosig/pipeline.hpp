#pragma once

#include <map>
#include <vector>

#include "emosig/core/manifest.hpp"
#include "emosig/dsp/gsr.hpp"
#include "emosig/dsp/spectral.hpp"
#include "emosig/features/dataset.hpp"

namespace emosig {

/// Every signal-conditioning knob. Defaults reproduce the stock pipeline.
struct DspConfig {
    std::vector<dsp::BandSpec> bands{dsp::default_bands().begin(),
                                     dsp::default_bands().end()};
    int filter_order = 4;
    double emg_band_low_hz = 20.0;
    double emg_band_high_hz = 125.0;
    double tonic_cutoff_hz = 0.05;
    dsp::WaveletDenoiseConfig wavelet;
    double peak_prominence_factor = 0.5;
    double emg_window_ms = 100.0;

    void validate() const;
};

/// Conditions one session's traces and extracts the per-video features:
/// band powers / phasic GSR / EMG envelopes are derived once, then each
/// trial's series are corrected against that trial's 30 s baseline and the
/// 58 features are computed over the last 30 s of every video.
features::SessionFeatures process_session(const std::string& subject_id,
                                          const std::map<SensorKind, RawTrace>& traces,
                                          const ProtocolTimeline& timeline,
                                          const DspConfig& config = {});

/// Loads the manifest's traces and processes the session.
features::SessionFeatures process_manifest(const SessionManifest& manifest,
                                           const DspConfig& config = {});

/// Full extraction across manifests (sessions run in parallel).
features::Dataset extract_dataset(const std::vector<SessionManifest>& manifests,
                                  const DspConfig& config = {},
                                  const VideoLabelTable& table = default_video_table(),
                                  int threads = 0);

} // namespace emosig
