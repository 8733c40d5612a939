#pragma once

#include "emosig/core/types.hpp"
#include "emosig/dsp/series.hpp"

namespace emosig::dsp {

/// Full-wave rectification followed by a centered moving average
/// (edge-truncated). Expects a trace already band-passed to 20-125 Hz.
DerivedSeries emg_envelope(const RawTrace& emg, double window_ms = 100.0);

} // namespace emosig::dsp
