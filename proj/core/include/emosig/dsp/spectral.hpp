#pragma once

#include <array>
#include <string>
#include <vector>

#include "emosig/core/types.hpp"
#include "emosig/dsp/series.hpp"

namespace emosig::dsp {

/// One EEG frequency band, [low_hz, high_hz).
struct BandSpec {
    std::string name;
    double low_hz = 0.0;
    double high_hz = 0.0;
};

/// delta 0.5-4, theta 4-7.5, alpha 8-12.5, beta 13-30, gamma 30-100 Hz.
/// Alpha starts at 8 Hz so the bands do not overlap; gamma is capped at
/// 100 Hz and delta floored at 0.5 Hz to stay clear of DC and Nyquist.
const std::array<BandSpec, 5>& default_bands();

const BandSpec& band_by_name(std::string_view name);

/// Short-time band power: 1 s Hamming window, 50% overlap (output rate =
/// 2 Hz at 512 Hz input). Each value sums the one-sided periodogram over the
/// band's bins, normalized so a stationary signal's full-spectrum sum equals
/// its mean square. Windows are anchored at their start time.
DerivedSeries band_power_series(const RawTrace& eeg, const BandSpec& band);

/// All five default bands from one pass over the spectrogram.
std::vector<DerivedSeries> band_power_all(const RawTrace& eeg,
                                          const std::vector<BandSpec>& bands);

} // namespace emosig::dsp
