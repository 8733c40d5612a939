#include "emosig/features/stats.hpp"

#include <algorithm>
#include <cmath>

#include "emosig/errors.hpp"

namespace emosig::features {

SummaryStats summary_stats(std::span<const double> window) {
    if (window.empty()) throw EmptyWindow("summary statistics of an empty window");

    SummaryStats s;
    s.min = window.front();
    s.max = window.front();
    double sum = 0.0;
    for (double v : window) {
        sum += v;
        s.min = std::min(s.min, v);
        s.max = std::max(s.max, v);
    }
    s.mean = sum / static_cast<double>(window.size());
    double acc = 0.0;
    for (double v : window) acc += (v - s.mean) * (v - s.mean);
    s.variance = acc / static_cast<double>(window.size());
    s.std = std::sqrt(s.variance);
    return s;
}

} // namespace emosig::features
