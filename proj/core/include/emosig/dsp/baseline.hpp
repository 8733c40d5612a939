#pragma once

#include "emosig/dsp/series.hpp"

namespace emosig::dsp {

/// Subtracts the series mean over [baseline_start_s, baseline_end_s) from
/// every value. The window must intersect the series extent.
DerivedSeries baseline_correct(const DerivedSeries& series, double baseline_start_s,
                               double baseline_end_s);

/// Mean of a series over a half-open time window.
double window_mean(const DerivedSeries& series, double start_s, double end_s);

} // namespace emosig::dsp
