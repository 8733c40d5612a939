#pragma once

#include <utility>

#include "emosig/core/types.hpp"
#include "emosig/dsp/series.hpp"

namespace emosig::dsp {

/// Tonic/phasic split of a skin-conductance trace. Tonic is a zero-phase
/// 2nd-order low-pass of the input; phasic is the sample-wise remainder, so
/// tonic + phasic reconstructs the input exactly.
struct GsrDecomposition {
    DerivedSeries tonic;
    DerivedSeries phasic;
};
GsrDecomposition gsr_decompose(const RawTrace& gsr, double tonic_cutoff_hz = 0.05);

struct WaveletDenoiseConfig {
    std::string family = "db4";
    int levels = 5;
    /// Multiplies the universal threshold sigma*sqrt(2 ln n); 0 disables
    /// thresholding and the transform round-trips exactly.
    double threshold_scale = 1.0;
};

/// Soft-thresholds the detail coefficients of a multi-level DWT at the
/// universal threshold, sigma estimated from the median absolute deviation
/// of the finest details. Output length equals input length.
DerivedSeries wavelet_denoise(const DerivedSeries& phasic,
                              const WaveletDenoiseConfig& config = {});

/// Local maxima of the denoised phasic whose prominence reaches
/// prominence_factor times the standard deviation of the analysis window;
/// widths measured at half prominence.
PeakSet detect_peaks(const DerivedSeries& series, double prominence_factor = 0.5);

} // namespace emosig::dsp
