#include "emosig/dsp/emg.hpp"

#include <cmath>

#include "emosig/errors.hpp"

namespace emosig::dsp {

DerivedSeries emg_envelope(const RawTrace& emg, double window_ms) {
    if (emg.kind != SensorKind::EmgCh1 && emg.kind != SensorKind::EmgCh2) {
        throw Error("emg_envelope requires an EMG channel");
    }
    const size_t n = emg.samples.size();
    if (n == 0) throw TooShort("empty EMG trace");

    size_t width = static_cast<size_t>(std::llround(window_ms / 1000.0 * emg.rate_hz));
    if (width < 1) width = 1;
    if (width % 2 == 0) ++width; // keep the window centered
    const size_t half = width / 2;

    std::vector<double> rect(n);
    for (size_t i = 0; i < n; ++i) rect[i] = std::abs(emg.samples[i]);

    // prefix sums for the edge-truncated moving average
    std::vector<double> prefix(n + 1, 0.0);
    for (size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + rect[i];

    DerivedSeries out;
    out.kind = SeriesKind::EmgEnvelope;
    out.tag = std::string(to_string(emg.kind));
    out.rate_hz = emg.rate_hz;
    out.start_offset_s = emg.start_offset_s;
    out.values.resize(n);
    for (size_t i = 0; i < n; ++i) {
        const size_t lo = i >= half ? i - half : 0;
        const size_t hi = std::min(n, i + half + 1);
        out.values[i] = (prefix[hi] - prefix[lo]) / static_cast<double>(hi - lo);
    }
    return out;
}

} // namespace emosig::dsp
