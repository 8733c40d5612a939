#include "emosig/dsp/spectral.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "emosig/errors.hpp"

namespace emosig::dsp {

namespace {

using cplx = std::complex<double>;

bool is_power_of_two(size_t n) { return n > 0 && (n & (n - 1)) == 0; }

// In-place iterative radix-2 FFT.
void fft_radix2(std::vector<cplx>& a) {
    const size_t n = a.size();
    for (size_t i = 1, j = 0; i < n; ++i) {
        size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (size_t len = 2; len <= n; len <<= 1) {
        const double ang = -2.0 * std::numbers::pi / static_cast<double>(len);
        const cplx wlen(std::cos(ang), std::sin(ang));
        for (size_t i = 0; i < n; i += len) {
            cplx w(1.0, 0.0);
            for (size_t k = 0; k < len / 2; ++k) {
                const cplx u = a[i + k];
                const cplx v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
}

// |DFT|^2 of a real windowed frame, bins 0..n/2.
void power_spectrum(const std::vector<double>& frame, std::vector<double>& out) {
    const size_t n = frame.size();
    if (is_power_of_two(n)) {
        std::vector<cplx> buf(n);
        for (size_t i = 0; i < n; ++i) buf[i] = cplx(frame[i], 0.0);
        fft_radix2(buf);
        out.resize(n / 2 + 1);
        for (size_t k = 0; k <= n / 2; ++k) out[k] = std::norm(buf[k]);
    } else {
        // direct DFT fallback for non-power-of-two window sizes
        out.assign(n / 2 + 1, 0.0);
        for (size_t k = 0; k <= n / 2; ++k) {
            double re = 0.0, im = 0.0;
            const double w = -2.0 * std::numbers::pi * static_cast<double>(k) /
                             static_cast<double>(n);
            for (size_t i = 0; i < n; ++i) {
                re += frame[i] * std::cos(w * static_cast<double>(i));
                im += frame[i] * std::sin(w * static_cast<double>(i));
            }
            out[k] = re * re + im * im;
        }
    }
}

void check_band(const BandSpec& band, double rate_hz) {
    if (!(band.low_hz > 0.0) || !(band.low_hz < band.high_hz) ||
        !(band.high_hz < rate_hz / 2.0)) {
        throw BadBand("band " + band.name + " violates 0 < low < high < rate/2");
    }
}

} // namespace

const std::array<BandSpec, 5>& default_bands() {
    static const std::array<BandSpec, 5> bands = {{
        {"alpha", 8.0, 12.5},
        {"beta", 13.0, 30.0},
        {"gamma", 30.0, 100.0},
        {"delta", 0.5, 4.0},
        {"theta", 4.0, 7.5},
    }};
    return bands;
}

const BandSpec& band_by_name(std::string_view name) {
    for (const BandSpec& b : default_bands()) {
        if (b.name == name) return b;
    }
    throw BadBand("unknown band name: " + std::string(name));
}

std::vector<DerivedSeries> band_power_all(const RawTrace& eeg,
                                          const std::vector<BandSpec>& bands) {
    if (eeg.kind != SensorKind::EegRaw) {
        throw Error("band power requires an EEG_raw trace");
    }
    for (const BandSpec& b : bands) check_band(b, eeg.rate_hz);

    const size_t win = static_cast<size_t>(std::llround(eeg.rate_hz));
    if (win < 2 || eeg.samples.size() < win) {
        throw TooShort("band power needs at least 1 s of signal");
    }
    const size_t hop = win / 2;

    std::vector<double> window(win);
    double energy = 0.0;
    for (size_t i = 0; i < win; ++i) {
        window[i] = 0.54 - 0.46 * std::cos(2.0 * std::numbers::pi * static_cast<double>(i) /
                                           static_cast<double>(win - 1));
        energy += window[i] * window[i];
    }

    // bin ranges per band: k in [ceil(low/df), ...) with f_k < high
    const double df = eeg.rate_hz / static_cast<double>(win);
    struct BinRange { size_t lo, hi; }; // half-open
    std::vector<BinRange> ranges;
    for (const BandSpec& b : bands) {
        auto lo = static_cast<size_t>(std::ceil(b.low_hz / df - 1e-9));
        auto hi = static_cast<size_t>(std::ceil(b.high_hz / df - 1e-9));
        lo = std::max<size_t>(lo, 0);
        hi = std::min<size_t>(hi, win / 2 + 1);
        ranges.push_back({lo, hi});
    }

    const size_t frames = (eeg.samples.size() - win) / hop + 1;
    std::vector<DerivedSeries> out(bands.size());
    for (size_t b = 0; b < bands.size(); ++b) {
        out[b].kind = SeriesKind::BandPower;
        out[b].tag = bands[b].name;
        out[b].rate_hz = eeg.rate_hz / static_cast<double>(hop);
        out[b].start_offset_s = eeg.start_offset_s;
        out[b].values.resize(frames);
    }

    const double norm = 1.0 / (static_cast<double>(win) * energy);
    std::vector<double> frame(win), spectrum;
    for (size_t f = 0; f < frames; ++f) {
        const size_t base = f * hop;
        for (size_t i = 0; i < win; ++i) frame[i] = eeg.samples[base + i] * window[i];
        power_spectrum(frame, spectrum);
        for (size_t b = 0; b < bands.size(); ++b) {
            double acc = 0.0;
            for (size_t k = ranges[b].lo; k < ranges[b].hi; ++k) {
                const double sided = (k == 0 || 2 * k == win) ? 1.0 : 2.0;
                acc += sided * spectrum[k];
            }
            out[b].values[f] = acc * norm;
        }
    }
    return out;
}

DerivedSeries band_power_series(const RawTrace& eeg, const BandSpec& band) {
    return band_power_all(eeg, {band}).front();
}

} // namespace emosig::dsp
