#include "emosig/dsp/gsr.hpp"

#include <algorithm>
#include <cmath>

#include "emosig/dsp/butterworth.hpp"
#include "emosig/dsp/wavelet.hpp"
#include "emosig/errors.hpp"

namespace emosig::dsp {

GsrDecomposition gsr_decompose(const RawTrace& gsr, double tonic_cutoff_hz) {
    if (gsr.kind != SensorKind::Gsr) throw Error("gsr_decompose requires a GSR trace");
    constexpr int kOrder = 2;
    constexpr size_t kPad = 3 * kOrder;
    if (gsr.samples.size() <= kPad) throw TooShort("GSR trace too short to decompose");

    const SosChain lp = design_lowpass(tonic_cutoff_hz, gsr.rate_hz, kOrder);
    std::vector<double> tonic = filtfilt(lp, gsr.samples, kPad);

    GsrDecomposition out;
    out.tonic.kind = SeriesKind::GsrTonic;
    out.tonic.rate_hz = gsr.rate_hz;
    out.tonic.start_offset_s = gsr.start_offset_s;
    out.phasic = out.tonic;
    out.phasic.kind = SeriesKind::GsrPhasic;
    out.phasic.values.resize(gsr.samples.size());
    for (size_t i = 0; i < gsr.samples.size(); ++i) {
        out.phasic.values[i] = gsr.samples[i] - tonic[i];
    }
    out.tonic.values = std::move(tonic);
    return out;
}

DerivedSeries wavelet_denoise(const DerivedSeries& phasic, const WaveletDenoiseConfig& config) {
    if (phasic.kind != SeriesKind::GsrPhasic) {
        throw Error("wavelet_denoise expects the phasic component");
    }
    const size_t n = phasic.values.size();
    const size_t div = size_t{1} << config.levels;
    if (n < div) throw TooShort("signal shorter than 2^levels samples");

    // pad to a multiple of 2^levels by reflecting the tail
    const size_t padded = (n + div - 1) / div * div;
    std::vector<double> x = phasic.values;
    x.reserve(padded);
    for (size_t i = 0; x.size() < padded; ++i) x.push_back(phasic.values[n - 2 - i]);

    const WaveletFilter& filter = wavelet_by_name(config.family);
    DwtCoeffs coeffs = dwt_forward(x, filter, config.levels);

    if (config.threshold_scale > 0.0) {
        // universal threshold, sigma from the MAD of the finest details
        std::vector<double> mags;
        const std::vector<double>& finest = coeffs.details.back();
        mags.reserve(finest.size());
        for (double v : finest) mags.push_back(std::abs(v));
        std::sort(mags.begin(), mags.end());
        const size_t m = mags.size();
        const double median = (m % 2 == 1) ? mags[m / 2] : 0.5 * (mags[m / 2 - 1] + mags[m / 2]);
        const double sigma = median / 0.6745;
        const double threshold = config.threshold_scale * sigma *
                                 std::sqrt(2.0 * std::log(static_cast<double>(padded)));
        for (std::vector<double>& level : coeffs.details) {
            for (double& v : level) {
                const double mag = std::abs(v) - threshold;
                v = mag > 0.0 ? (v > 0.0 ? mag : -mag) : 0.0;
            }
        }
    }

    std::vector<double> rec = dwt_inverse(coeffs, filter);
    DerivedSeries out;
    out.kind = SeriesKind::GsrPhasicDenoised;
    out.rate_hz = phasic.rate_hz;
    out.start_offset_s = phasic.start_offset_s;
    out.values.assign(rec.begin(), rec.begin() + static_cast<std::ptrdiff_t>(n));
    return out;
}

namespace {

struct PeakInfo {
    size_t index;
    double prominence;
    size_t left_base;
    size_t right_base;
};

// Local maxima with plateau handling: a flat top counts once, at its middle.
std::vector<size_t> local_maxima(const std::vector<double>& x) {
    std::vector<size_t> peaks;
    const size_t n = x.size();
    size_t i = 1;
    while (i + 1 < n) {
        if (x[i - 1] < x[i]) {
            size_t ahead = i + 1;
            while (ahead + 1 < n && x[ahead] == x[i]) ++ahead;
            if (x[ahead] < x[i]) {
                peaks.push_back((i + ahead - 1) / 2);
                i = ahead;
                continue;
            }
            i = ahead;
            continue;
        }
        ++i;
    }
    return peaks;
}

PeakInfo prominence_of(const std::vector<double>& x, size_t p) {
    PeakInfo info{p, 0.0, p, p};
    double lmin = x[p], rmin = x[p];
    for (size_t i = p; i > 0 && x[i - 1] <= x[p];) {
        --i;
        if (x[i] < lmin) { lmin = x[i]; info.left_base = i; }
    }
    for (size_t i = p; i + 1 < x.size() && x[i + 1] <= x[p];) {
        ++i;
        if (x[i] < rmin) { rmin = x[i]; info.right_base = i; }
    }
    info.prominence = x[p] - std::max(lmin, rmin);
    return info;
}

double width_at_half_prominence(const std::vector<double>& x, const PeakInfo& peak) {
    const double h_eval = x[peak.index] - 0.5 * peak.prominence;
    size_t i = peak.index;
    while (i > peak.left_base && x[i - 1] > h_eval) --i;
    double left_ip = static_cast<double>(i);
    if (i > peak.left_base && x[i - 1] < h_eval) {
        left_ip -= (h_eval - x[i]) / (x[i - 1] - x[i]);
    }
    i = peak.index;
    while (i < peak.right_base && x[i + 1] > h_eval) ++i;
    double right_ip = static_cast<double>(i);
    if (i < peak.right_base && x[i + 1] < h_eval) {
        right_ip += (h_eval - x[i]) / (x[i + 1] - x[i]);
    }
    return right_ip - left_ip;
}

} // namespace

PeakSet detect_peaks(const DerivedSeries& series, double prominence_factor) {
    if (series.kind != SeriesKind::GsrPhasicDenoised) {
        throw Error("detect_peaks expects the denoised phasic component");
    }
    PeakSet out;
    const std::vector<double>& x = series.values;
    if (x.size() < 3) return out;

    double mean = 0.0;
    for (double v : x) mean += v;
    mean /= static_cast<double>(x.size());
    double var = 0.0;
    for (double v : x) var += (v - mean) * (v - mean);
    var /= static_cast<double>(x.size());
    const double min_prominence = prominence_factor * std::sqrt(var);

    for (size_t p : local_maxima(x)) {
        const PeakInfo info = prominence_of(x, p);
        if (info.prominence < min_prominence || info.prominence <= 0.0) continue;
        Peak peak;
        peak.time_s = series.time_of(p);
        peak.amplitude_us = info.prominence;
        peak.width_s = width_at_half_prominence(x, info) / series.rate_hz;
        out.peaks.push_back(peak);
    }
    return out;
}

} // namespace emosig::dsp
