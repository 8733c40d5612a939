#pragma once

#include <vector>

#include "emosig/dsp/series.hpp"
#include "emosig/features/feature_vector.hpp"

namespace emosig::features {

/// 35 EEG features: {alpha, beta, gamma, delta, theta, attention, meditation}
/// x {mean, min, max, variance, std} over the half-open window. band_series
/// must hold the five bands in that order, already baseline-corrected.
std::vector<double> eeg_features(const std::vector<dsp::DerivedSeries>& band_series,
                                 const dsp::DerivedSeries& attention,
                                 const dsp::DerivedSeries& meditation,
                                 double window_start_s, double window_end_s);

/// 13 GSR features: 5 stats of the phasic; mean derivative, mean negative
/// derivative (0 if none) and negative-derivative proportion of the denoised
/// phasic; 5 peak-shape features (all 0 when the peak set is empty).
/// Derivatives are first differences times the sampling rate.
std::vector<double> gsr_features(const dsp::DerivedSeries& phasic,
                                 const dsp::DerivedSeries& denoised_phasic,
                                 const dsp::PeakSet& peaks,
                                 double window_start_s, double window_end_s);

/// 10 EMG features: 5 stats of each channel envelope, ch1 block first.
std::vector<double> emg_features(const dsp::DerivedSeries& envelope_ch1,
                                 const dsp::DerivedSeries& envelope_ch2,
                                 double window_start_s, double window_end_s);

} // namespace emosig::features
