#include "emosig/dsp/wavelet.hpp"

#include <stdexcept>

#include "emosig/errors.hpp"

namespace emosig::dsp {

namespace {

WaveletFilter make_filter(std::string name, std::vector<double> lowpass) {
    const size_t n = lowpass.size();
    std::vector<double> highpass(n);
    for (size_t k = 0; k < n; ++k) {
        highpass[k] = (k % 2 == 0 ? 1.0 : -1.0) * lowpass[n - 1 - k];
    }
    return WaveletFilter{std::move(name), std::move(lowpass), std::move(highpass)};
}

} // namespace

const WaveletFilter& wavelet_by_name(std::string_view name) {
    static const WaveletFilter db2 = make_filter(
        "db2", {0.48296291314469025, 0.836516303737469, 0.22414386804185735,
                -0.12940952255092145});
    static const WaveletFilter db4 = make_filter(
        "db4", {0.23037781330885523, 0.7148465705525415, 0.6308807679295904,
                -0.02798376941698385, -0.18703481171888114, 0.030841381835986965,
                0.032883011666982945, -0.010597401784997278});
    static const WaveletFilter db8 = make_filter(
        "db8",
        {0.05441584224308161,     0.3128715909144659,    0.6756307362980128,
         0.5853546836548691,      -0.015829105256023893, -0.2840155429624281,
         0.00047248457399797254,  0.128747426620186,     -0.01736930100202211,
         -0.04408825393106472,    0.013981027917015516,  0.008746094047015655,
         -0.00487035299301066,    -0.000391740372995977, 0.0006754494059985568,
         -0.00011747678400228192});
    if (name == "db2") return db2;
    if (name == "db4") return db4;
    if (name == "db8") return db8;
    throw OutOfRange("unsupported wavelet family: " + std::string(name) +
                     " (supported: db2, db4, db8)");
}

DwtCoeffs dwt_forward(const std::vector<double>& x, const WaveletFilter& filter, int levels) {
    if (levels < 1) throw OutOfRange("wavelet levels must be >= 1");
    const size_t div = size_t{1} << levels;
    if (x.size() % div != 0 || x.empty()) {
        throw TooShort("signal length must be a positive multiple of 2^levels");
    }

    DwtCoeffs coeffs;
    coeffs.details.resize(levels);
    std::vector<double> approx = x;
    const size_t taps = filter.lowpass.size();
    for (int level = 0; level < levels; ++level) {
        const size_t n = approx.size();
        const size_t half = n / 2;
        std::vector<double> a(half, 0.0), d(half, 0.0);
        for (size_t i = 0; i < half; ++i) {
            double sa = 0.0, sd = 0.0;
            for (size_t k = 0; k < taps; ++k) {
                const double v = approx[(2 * i + k) % n];
                sa += filter.lowpass[k] * v;
                sd += filter.highpass[k] * v;
            }
            a[i] = sa;
            d[i] = sd;
        }
        // details stored coarsest-first
        coeffs.details[levels - 1 - level] = std::move(d);
        approx = std::move(a);
    }
    coeffs.approx = std::move(approx);
    return coeffs;
}

std::vector<double> dwt_inverse(const DwtCoeffs& coeffs, const WaveletFilter& filter) {
    std::vector<double> approx = coeffs.approx;
    const size_t taps = filter.lowpass.size();
    for (const std::vector<double>& d : coeffs.details) {
        const size_t half = approx.size();
        if (d.size() != half) throw Error("inconsistent wavelet coefficient lengths");
        const size_t n = 2 * half;
        std::vector<double> next(n, 0.0);
        for (size_t i = 0; i < half; ++i) {
            for (size_t k = 0; k < taps; ++k) {
                next[(2 * i + k) % n] += filter.lowpass[k] * approx[i] + filter.highpass[k] * d[i];
            }
        }
        approx = std::move(next);
    }
    return approx;
}

} // namespace emosig::dsp
