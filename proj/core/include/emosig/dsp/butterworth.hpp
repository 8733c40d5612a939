#pragma once

#include <cstddef>
#include <vector>

#include "emosig/core/types.hpp"

namespace emosig::dsp {

/// One second-order section, direct form II transposed. a0 is normalized to 1.
struct Biquad {
    double b0 = 1.0, b1 = 0.0, b2 = 0.0;
    double a1 = 0.0, a2 = 0.0;
};

using SosChain = std::vector<Biquad>;

/// Butterworth band-pass of prototype order `order` (2*order poles),
/// designed by bilinear transform with pre-warped edges.
SosChain design_bandpass(double low_hz, double high_hz, double rate_hz, int order);

/// Butterworth low-pass of order `order`.
SosChain design_lowpass(double cutoff_hz, double rate_hz, int order);

/// Single forward pass through the cascade with step steady-state priming.
std::vector<double> sos_filter(const SosChain& sos, const std::vector<double>& x);

/// Forward-backward (zero-phase) filtering with odd-reflection padding of
/// `pad` samples on each side. Requires x.size() > pad.
std::vector<double> filtfilt(const SosChain& sos, const std::vector<double>& x, size_t pad);

/// Zero-phase Butterworth band-pass of a trace. order in {2, 4};
/// 0 < low < high < rate/2; trace longer than 6*order samples.
RawTrace bandpass_filter(const RawTrace& trace, double low_hz, double high_hz, int order);

} // namespace emosig::dsp
