#include "emosig/features/feature_vector.hpp"

#include "emosig/errors.hpp"

namespace emosig::features {

namespace {

const char* kStatNames[] = {"mean", "min", "max", "var", "std"};
const char* kEegSeries[] = {"alpha", "beta", "gamma", "delta", "theta",
                            "attention", "meditation"};

} // namespace

std::string SensorMask::to_string() const {
    std::string s;
    auto add = [&s](const char* name) {
        if (!s.empty()) s += "+";
        s += name;
    };
    if (eeg) add("EEG");
    if (gsr) add("GSR");
    if (emg) add("EMG");
    return s.empty() ? "none" : s;
}

SensorMask SensorMask::parse(std::string_view text) {
    SensorMask mask{false, false, false};
    size_t pos = 0;
    while (pos < text.size()) {
        size_t sep = text.find('+', pos);
        if (sep == std::string_view::npos) sep = text.size();
        std::string_view part = text.substr(pos, sep - pos);
        if (part == "EEG" || part == "eeg") mask.eeg = true;
        else if (part == "GSR" || part == "gsr") mask.gsr = true;
        else if (part == "EMG" || part == "emg") mask.emg = true;
        else if (part == "ALL" || part == "all" || part == "All") {
            mask.eeg = mask.gsr = mask.emg = true;
        } else {
            throw OutOfRange("unknown sensor block: " + std::string(part));
        }
        pos = sep + 1;
    }
    if (mask.empty()) throw EmptyMask("sensor mask selects no blocks");
    return mask;
}

const std::array<SensorMask, 7>& all_masks() {
    static const std::array<SensorMask, 7> masks = {{
        {true, false, false},  // EEG
        {false, true, false},  // GSR
        {false, false, true},  // EMG
        {true, true, false},   // EEG+GSR
        {false, true, true},   // GSR+EMG
        {true, false, true},   // EEG+EMG
        {true, true, true},    // all
    }};
    return masks;
}

std::vector<std::string> feature_names(const SensorMask& mask) {
    std::vector<std::string> names;
    names.reserve(mask.dimension());
    if (mask.eeg) {
        for (const char* series : kEegSeries) {
            for (const char* stat : kStatNames) {
                names.push_back(std::string("eeg_") + series + "_" + stat);
            }
        }
    }
    if (mask.gsr) {
        for (const char* stat : kStatNames) {
            names.push_back(std::string("gsr_phasic_") + stat);
        }
        names.emplace_back("gsr_deriv_mean");
        names.emplace_back("gsr_deriv_neg_mean");
        names.emplace_back("gsr_deriv_neg_prop");
        names.emplace_back("gsr_peak_width_mean");
        names.emplace_back("gsr_peak_width_min");
        names.emplace_back("gsr_peak_width_max");
        names.emplace_back("gsr_peak_count_over_min_width");
        names.emplace_back("gsr_peak_amp_sum_over_min_width");
    }
    if (mask.emg) {
        for (const char* channel : {"ch1", "ch2"}) {
            for (const char* stat : kStatNames) {
                names.push_back(std::string("emg_") + channel + "_" + stat);
            }
        }
    }
    return names;
}

} // namespace emosig::features
