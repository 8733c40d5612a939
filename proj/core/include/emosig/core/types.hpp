#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace emosig {

/// The six recorded channels of one session.
enum class SensorKind {
    EegRaw,
    EegAttention,
    EegMeditation,
    Gsr,
    EmgCh1,
    EmgCh2,
};

inline constexpr SensorKind kAllSensorKinds[] = {
    SensorKind::EegRaw,    SensorKind::EegAttention, SensorKind::EegMeditation,
    SensorKind::Gsr,       SensorKind::EmgCh1,       SensorKind::EmgCh2,
};

std::string_view to_string(SensorKind kind);
SensorKind sensor_kind_from_string(std::string_view name);

/// Nominal sampling rate for a channel loaded from a conforming manifest.
double expected_rate_hz(SensorKind kind);

/// Binary class label. Unassigned marks scores in the (4.5, 6) dead zone and
/// never enters a training dataset.
enum class Label { Low, High, Unassigned };

std::string_view to_string(Label label);
Label label_from_string(std::string_view name);

/// One uniformly sampled channel. EEG in uV, GSR in uS, EMG in mV,
/// attention/meditation dimensionless 0-100.
struct RawTrace {
    SensorKind kind = SensorKind::EegRaw;
    double rate_hz = 0.0;
    double start_offset_s = 0.0; // seconds from session start
    std::vector<double> samples;

    double duration_s() const {
        return rate_hz > 0 ? static_cast<double>(samples.size()) / rate_hz : 0.0;
    }
    /// Throws on non-positive rate or non-finite samples.
    void validate() const;
};

} // namespace emosig
