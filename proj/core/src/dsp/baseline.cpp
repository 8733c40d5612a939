#include "emosig/dsp/baseline.hpp"

#include <cmath>

#include "emosig/errors.hpp"

namespace emosig::dsp {

std::string_view to_string(SeriesKind kind) {
    switch (kind) {
        case SeriesKind::BandPower:         return "band_power";
        case SeriesKind::GsrTonic:          return "gsr_tonic";
        case SeriesKind::GsrPhasic:         return "gsr_phasic";
        case SeriesKind::GsrPhasicDenoised: return "gsr_phasic_denoised";
        case SeriesKind::EmgEnvelope:       return "emg_envelope";
        case SeriesKind::Attention:         return "attention";
        case SeriesKind::Meditation:        return "meditation";
    }
    return "?";
}

IndexRange window_indices(const DerivedSeries& series, double start_s, double end_s) {
    const double n = static_cast<double>(series.values.size());
    auto to_index = [&](double t) {
        double v = (t - series.start_offset_s) * series.rate_hz;
        v = std::ceil(v - 1e-9);
        if (v < 0.0) v = 0.0;
        if (v > n) v = n;
        return static_cast<size_t>(v);
    };
    IndexRange r;
    r.begin = to_index(start_s);
    r.end = to_index(end_s);
    if (r.end < r.begin) r.end = r.begin;
    return r;
}

double window_mean(const DerivedSeries& series, double start_s, double end_s) {
    const IndexRange r = window_indices(series, start_s, end_s);
    if (r.size() == 0) {
        throw WindowOutOfRange("window contains no samples of the series");
    }
    double sum = 0.0;
    for (size_t i = r.begin; i < r.end; ++i) sum += series.values[i];
    return sum / static_cast<double>(r.size());
}

DerivedSeries baseline_correct(const DerivedSeries& series, double baseline_start_s,
                               double baseline_end_s) {
    const double extent_end = series.start_offset_s +
                              static_cast<double>(series.values.size()) / series.rate_hz;
    const double tol = 0.5 / series.rate_hz;
    if (baseline_start_s < series.start_offset_s - tol || baseline_end_s > extent_end + tol) {
        throw WindowOutOfRange("baseline window extends past the series extent");
    }
    const double mean = window_mean(series, baseline_start_s, baseline_end_s);
    DerivedSeries out = series;
    for (double& v : out.values) v -= mean;
    return out;
}

} // namespace emosig::dsp
