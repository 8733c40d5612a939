#include "emosig/core/types.hpp"

#include <cmath>

#include "emosig/errors.hpp"

namespace emosig {

std::string_view to_string(SensorKind kind) {
    switch (kind) {
        case SensorKind::EegRaw:        return "EEG_raw";
        case SensorKind::EegAttention:  return "EEG_attention";
        case SensorKind::EegMeditation: return "EEG_meditation";
        case SensorKind::Gsr:           return "GSR";
        case SensorKind::EmgCh1:        return "EMG_ch1";
        case SensorKind::EmgCh2:        return "EMG_ch2";
    }
    return "?";
}

SensorKind sensor_kind_from_string(std::string_view name) {
    for (SensorKind k : kAllSensorKinds) {
        if (to_string(k) == name) return k;
    }
    throw MalformedManifest("unknown sensor kind: " + std::string(name));
}

double expected_rate_hz(SensorKind kind) {
    switch (kind) {
        case SensorKind::EegRaw:
        case SensorKind::EmgCh1:
        case SensorKind::EmgCh2:
            return 512.0;
        case SensorKind::Gsr:
            return 128.0;
        case SensorKind::EegAttention:
        case SensorKind::EegMeditation:
            return 1.0;
    }
    return 0.0;
}

std::string_view to_string(Label label) {
    switch (label) {
        case Label::Low:        return "Low";
        case Label::High:       return "High";
        case Label::Unassigned: return "Unassigned";
    }
    return "?";
}

Label label_from_string(std::string_view name) {
    if (name == "Low") return Label::Low;
    if (name == "High") return Label::High;
    if (name == "Unassigned") return Label::Unassigned;
    throw OutOfRange("unknown label: " + std::string(name));
}

void RawTrace::validate() const {
    if (!(rate_hz > 0.0)) {
        throw MalformedTrace("sampling rate must be positive");
    }
    for (double v : samples) {
        if (!std::isfinite(v)) throw NonFinite("trace contains a non-finite sample");
    }
}

} // namespace emosig
