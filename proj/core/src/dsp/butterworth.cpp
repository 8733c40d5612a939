#include "emosig/dsp/butterworth.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "emosig/errors.hpp"

namespace emosig::dsp {

namespace {

using cplx = std::complex<double>;

// Unit Butterworth low-pass prototype poles, left half-plane.
std::vector<cplx> prototype_poles(int order) {
    std::vector<cplx> poles;
    poles.reserve(order);
    for (int k = 0; k < order; ++k) {
        const double theta = std::numbers::pi * (2.0 * k + order + 1.0) / (2.0 * order);
        poles.emplace_back(std::cos(theta), std::sin(theta));
    }
    return poles;
}

double prewarp(double f_hz, double rate_hz) {
    return 2.0 * rate_hz * std::tan(std::numbers::pi * f_hz / rate_hz);
}

cplx bilinear(cplx s, double rate_hz) {
    const double two_fs = 2.0 * rate_hz;
    return (two_fs + s) / (two_fs - s);
}

// Groups z-plane poles into conjugate (or real) pairs and emits one biquad
// denominator per pair. Numerators are attached by the caller.
std::vector<Biquad> pair_poles(std::vector<cplx> poles) {
    // Sections with poles nearest the unit circle go last.
    std::sort(poles.begin(), poles.end(), [](const cplx& a, const cplx& b) {
        if (std::abs(a) != std::abs(b)) return std::abs(a) < std::abs(b);
        if (a.real() != b.real()) return a.real() < b.real();
        return std::abs(a.imag()) < std::abs(b.imag());
    });

    std::vector<Biquad> sections;
    std::vector<bool> used(poles.size(), false);
    for (size_t i = 0; i < poles.size(); ++i) {
        if (used[i]) continue;
        used[i] = true;
        if (std::abs(poles[i].imag()) > 1e-10) {
            // find the conjugate partner
            size_t match = poles.size();
            double best = 1e300;
            for (size_t j = i + 1; j < poles.size(); ++j) {
                if (used[j]) continue;
                const double d = std::abs(poles[j] - std::conj(poles[i]));
                if (d < best) { best = d; match = j; }
            }
            if (match == poles.size()) throw Error("unpaired complex pole in filter design");
            used[match] = true;
            Biquad s;
            s.a1 = -2.0 * poles[i].real();
            s.a2 = std::norm(poles[i]);
            sections.push_back(s);
        } else {
            // pair with another real pole if one remains, else single pole
            size_t match = poles.size();
            for (size_t j = i + 1; j < poles.size(); ++j) {
                if (!used[j] && std::abs(poles[j].imag()) <= 1e-10) { match = j; break; }
            }
            Biquad s;
            if (match < poles.size()) {
                used[match] = true;
                s.a1 = -(poles[i].real() + poles[match].real());
                s.a2 = poles[i].real() * poles[match].real();
            } else {
                s.a1 = -poles[i].real();
                s.a2 = 0.0;
            }
            sections.push_back(s);
        }
    }
    return sections;
}

cplx section_response(const Biquad& s, cplx zinv) {
    return (s.b0 + s.b1 * zinv + s.b2 * zinv * zinv) /
           (1.0 + s.a1 * zinv + s.a2 * zinv * zinv);
}

void normalize_gain(SosChain& sos, double omega_digital) {
    const cplx zinv = std::exp(cplx(0.0, -omega_digital));
    cplx h(1.0, 0.0);
    for (const Biquad& s : sos) h *= section_response(s, zinv);
    const double mag = std::abs(h);
    if (mag <= 0.0) throw Error("degenerate filter gain");
    const double k = 1.0 / mag;
    sos.front().b0 *= k;
    sos.front().b1 *= k;
    sos.front().b2 *= k;
}

} // namespace

SosChain design_bandpass(double low_hz, double high_hz, double rate_hz, int order) {
    if (!(low_hz > 0.0) || !(low_hz < high_hz) || !(high_hz < rate_hz / 2.0)) {
        throw BadBand("band edges must satisfy 0 < low < high < rate/2");
    }
    const double w1 = prewarp(low_hz, rate_hz);
    const double w2 = prewarp(high_hz, rate_hz);
    const double bw = w2 - w1;
    const double w0sq = w1 * w2;

    std::vector<cplx> zpoles;
    zpoles.reserve(2 * order);
    for (const cplx& p : prototype_poles(order)) {
        const cplx bp = bw * p;
        const cplx disc = std::sqrt(bp * bp - 4.0 * w0sq);
        zpoles.push_back(bilinear((bp + disc) / 2.0, rate_hz));
        zpoles.push_back(bilinear((bp - disc) / 2.0, rate_hz));
    }

    SosChain sos = pair_poles(std::move(zpoles));
    // order zeros at z=+1 and order at z=-1: one of each per section
    for (Biquad& s : sos) { s.b0 = 1.0; s.b1 = 0.0; s.b2 = -1.0; }

    const double omega_center = 2.0 * std::atan(std::sqrt(w0sq) / (2.0 * rate_hz));
    normalize_gain(sos, omega_center);
    return sos;
}

SosChain design_lowpass(double cutoff_hz, double rate_hz, int order) {
    if (!(cutoff_hz > 0.0) || !(cutoff_hz < rate_hz / 2.0)) {
        throw BadBand("cutoff must satisfy 0 < cutoff < rate/2");
    }
    const double wc = prewarp(cutoff_hz, rate_hz);

    std::vector<cplx> zpoles;
    zpoles.reserve(order);
    for (const cplx& p : prototype_poles(order)) zpoles.push_back(bilinear(wc * p, rate_hz));

    SosChain sos = pair_poles(std::move(zpoles));
    for (Biquad& s : sos) {
        // two zeros at z=-1 per pole pair, one for a lone real pole
        if (s.a2 != 0.0) { s.b0 = 1.0; s.b1 = 2.0; s.b2 = 1.0; }
        else { s.b0 = 1.0; s.b1 = 1.0; s.b2 = 0.0; }
    }
    normalize_gain(sos, 0.0);
    return sos;
}

std::vector<double> sos_filter(const SosChain& sos, const std::vector<double>& x) {
    std::vector<double> y = x;
    // Each section is primed with its step steady state for the first input
    // value, which suppresses start-up transients on near-constant edges.
    double level = y.empty() ? 0.0 : y.front();
    for (const Biquad& s : sos) {
        const double den = 1.0 + s.a1 + s.a2;
        const double dc = std::abs(den) > 1e-300 ? (s.b0 + s.b1 + s.b2) / den : 0.0;
        double s1 = (dc - s.b0) * level;
        double s2 = (s.b2 - s.a2 * dc) * level;
        for (double& v : y) {
            const double in = v;
            const double out = s.b0 * in + s1;
            s1 = s.b1 * in - s.a1 * out + s2;
            s2 = s.b2 * in - s.a2 * out;
            v = out;
        }
        level *= dc;
    }
    return y;
}

std::vector<double> filtfilt(const SosChain& sos, const std::vector<double>& x, size_t pad) {
    const size_t n = x.size();
    if (n <= pad) throw TooShort("signal shorter than filter padding");

    std::vector<double> ext;
    ext.reserve(n + 2 * pad);
    for (size_t i = 0; i < pad; ++i) ext.push_back(2.0 * x.front() - x[pad - i]);
    ext.insert(ext.end(), x.begin(), x.end());
    for (size_t i = 0; i < pad; ++i) ext.push_back(2.0 * x.back() - x[n - 2 - i]);

    std::vector<double> y = sos_filter(sos, ext);
    std::reverse(y.begin(), y.end());
    y = sos_filter(sos, y);
    std::reverse(y.begin(), y.end());
    return {y.begin() + pad, y.begin() + pad + n};
}

RawTrace bandpass_filter(const RawTrace& trace, double low_hz, double high_hz, int order) {
    if (order != 2 && order != 4) throw OutOfRange("band-pass order must be 2 or 4");
    if (!(low_hz > 0.0) || !(low_hz < high_hz) || !(high_hz < trace.rate_hz / 2.0)) {
        throw BadBand("band edges must satisfy 0 < low < high < rate/2");
    }
    const size_t min_len = 6 * static_cast<size_t>(order);
    if (trace.samples.size() <= min_len) {
        throw TooShort("trace must be longer than 6x filter order");
    }

    const SosChain sos = design_bandpass(low_hz, high_hz, trace.rate_hz, order);
    RawTrace out = trace;
    out.samples = filtfilt(sos, trace.samples, 3 * static_cast<size_t>(order));
    return out;
}

} // namespace emosig::dsp
