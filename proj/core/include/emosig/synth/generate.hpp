#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>

#include "emosig/core/manifest.hpp"
#include "emosig/core/protocol.hpp"
#include "emosig/core/types.hpp"
#include "emosig/core/video_table.hpp"

namespace emosig::synth {

/// How strongly the generated physiology tracks the stimulus labels. With
/// every gain at 0 the traces are statistically independent of the labels.
struct ModulationSpec {
    double arousal_gsr_gain = 0.0;   // extra SCR pulses/min in High-arousal videos
    double arousal_emg_gain = 0.0;   // burst amplitude x(1+gain) in High-arousal videos
    double valence_alpha_gain = 0.0; // alpha power x(1+gain) in High-valence videos
    double noise_level = 1.0;        // scales additive sensor noise
    uint64_t seed = 0;

    void validate() const; // finite gains, noise_level > 0
};

/// Seeded synthetic session: EEG as band-limited noise with valence-modulated
/// alpha, GSR as tonic drift plus Poisson bi-exponential SCR pulses (rate
/// raised in High-arousal videos), EMG as 20-125 Hz noise with arousal-scaled
/// bursts, attention/meditation as bounded random walks. Fully determined by
/// (spec, subject_id, timeline).
std::map<SensorKind, RawTrace> generate_session(const std::string& subject_id,
                                                const ProtocolTimeline& timeline,
                                                const VideoLabelTable& table,
                                                const ModulationSpec& spec);

/// Writes the six trace CSVs plus manifest.json under dir/<subject_id>/ and
/// returns the manifest path.
std::filesystem::path write_session(const std::filesystem::path& dir,
                                    const std::string& subject_id,
                                    const std::map<SensorKind, RawTrace>& traces,
                                    const ProtocolTimeline& timeline);

} // namespace emosig::synth
