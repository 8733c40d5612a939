#include "emosig/features/extract.hpp"

#include <algorithm>
#include <cmath>

#include "emosig/dsp/baseline.hpp"
#include "emosig/errors.hpp"
#include "emosig/features/stats.hpp"

namespace emosig::features {

namespace {

std::span<const double> window_slice(const dsp::DerivedSeries& series, double start_s,
                                     double end_s) {
    const dsp::IndexRange r = dsp::window_indices(series, start_s, end_s);
    if (r.size() == 0) throw EmptyWindow("feature window contains no samples");
    return {series.values.data() + r.begin, r.size()};
}

void append_stats(std::vector<double>& out, std::span<const double> window) {
    const SummaryStats s = summary_stats(window);
    out.push_back(s.mean);
    out.push_back(s.min);
    out.push_back(s.max);
    out.push_back(s.variance);
    out.push_back(s.std);
}

} // namespace

std::vector<double> eeg_features(const std::vector<dsp::DerivedSeries>& band_series,
                                 const dsp::DerivedSeries& attention,
                                 const dsp::DerivedSeries& meditation,
                                 double window_start_s, double window_end_s) {
    if (band_series.size() != 5) {
        throw MissingSeries("eeg_features needs the five band-power series");
    }
    std::vector<double> out;
    out.reserve(SensorMask::kEegDim);
    for (const dsp::DerivedSeries& s : band_series) {
        append_stats(out, window_slice(s, window_start_s, window_end_s));
    }
    append_stats(out, window_slice(attention, window_start_s, window_end_s));
    append_stats(out, window_slice(meditation, window_start_s, window_end_s));
    return out;
}

std::vector<double> gsr_features(const dsp::DerivedSeries& phasic,
                                 const dsp::DerivedSeries& denoised_phasic,
                                 const dsp::PeakSet& peaks,
                                 double window_start_s, double window_end_s) {
    std::vector<double> out;
    out.reserve(SensorMask::kGsrDim);
    append_stats(out, window_slice(phasic, window_start_s, window_end_s));

    // first differences scaled to a rate-independent derivative
    const std::span<const double> den =
        window_slice(denoised_phasic, window_start_s, window_end_s);
    double deriv_sum = 0.0, neg_sum = 0.0;
    size_t deriv_count = 0, neg_count = 0;
    for (size_t i = 0; i + 1 < den.size(); ++i) {
        const double d = (den[i + 1] - den[i]) * denoised_phasic.rate_hz;
        deriv_sum += d;
        ++deriv_count;
        if (d < 0.0) {
            neg_sum += d;
            ++neg_count;
        }
    }
    out.push_back(deriv_count ? deriv_sum / static_cast<double>(deriv_count) : 0.0);
    out.push_back(neg_count ? neg_sum / static_cast<double>(neg_count) : 0.0);
    out.push_back(deriv_count ? static_cast<double>(neg_count) /
                                    static_cast<double>(deriv_count)
                              : 0.0);

    if (peaks.peaks.empty()) {
        out.insert(out.end(), 5, 0.0);
        return out;
    }
    double width_sum = 0.0, amp_sum = 0.0;
    double width_min = peaks.peaks.front().width_s;
    double width_max = width_min;
    for (const dsp::Peak& p : peaks.peaks) {
        width_sum += p.width_s;
        amp_sum += p.amplitude_us;
        width_min = std::min(width_min, p.width_s);
        width_max = std::max(width_max, p.width_s);
    }
    const double count = static_cast<double>(peaks.peaks.size());
    out.push_back(width_sum / count);
    out.push_back(width_min);
    out.push_back(width_max);
    out.push_back(count / width_min);
    out.push_back(amp_sum / width_min);
    return out;
}

std::vector<double> emg_features(const dsp::DerivedSeries& envelope_ch1,
                                 const dsp::DerivedSeries& envelope_ch2,
                                 double window_start_s, double window_end_s) {
    std::vector<double> out;
    out.reserve(SensorMask::kEmgDim);
    append_stats(out, window_slice(envelope_ch1, window_start_s, window_end_s));
    append_stats(out, window_slice(envelope_ch2, window_start_s, window_end_s));
    return out;
}

} // namespace emosig::features
