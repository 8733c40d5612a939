#pragma once

#include <span>

namespace emosig::features {

/// Population (1/n) variance; std = sqrt(variance).
struct SummaryStats {
    double mean = 0.0;
    double min = 0.0;
    double max = 0.0;
    double variance = 0.0;
    double std = 0.0;
};

/// Throws EmptyWindow on an empty span.
SummaryStats summary_stats(std::span<const double> window);

} // namespace emosig::features
