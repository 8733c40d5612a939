#pragma once

#include <string>
#include <vector>

#include "emosig/core/types.hpp"

namespace emosig::dsp {

/// What a derived series holds. BandPower carries the band name, EmgEnvelope
/// the source channel.
enum class SeriesKind {
    BandPower,
    GsrTonic,
    GsrPhasic,
    GsrPhasicDenoised,
    EmgEnvelope,
    Attention,
    Meditation,
};

std::string_view to_string(SeriesKind kind);

struct DerivedSeries {
    SeriesKind kind = SeriesKind::BandPower;
    std::string tag;             // band name or channel name, empty otherwise
    double rate_hz = 0.0;
    double start_offset_s = 0.0; // time of values[0]
    std::vector<double> values;

    double time_of(size_t i) const { return start_offset_s + static_cast<double>(i) / rate_hz; }
};

/// Half-open [start_s, end_s) slice of a series, as value indices, clamped
/// to the series extent (possibly empty).
struct IndexRange {
    size_t begin = 0;
    size_t end = 0; // exclusive
    size_t size() const { return end - begin; }
};
IndexRange window_indices(const DerivedSeries& series, double start_s, double end_s);

/// One detected skin-conductance response.
struct Peak {
    double time_s = 0.0;      // apex position
    double amplitude_us = 0.0; // prominence above the surrounding signal
    double width_s = 0.0;      // width at half prominence
};

struct PeakSet {
    std::vector<Peak> peaks;
};

} // namespace emosig::dsp
