#pragma once

#include <array>
#include <string>
#include <vector>

namespace emosig::features {

/// Which sensor blocks a feature vector carries.
struct SensorMask {
    bool eeg = true;
    bool gsr = true;
    bool emg = true;

    static constexpr size_t kEegDim = 35;
    static constexpr size_t kGsrDim = 13;
    static constexpr size_t kEmgDim = 10;

    size_t dimension() const {
        return (eeg ? kEegDim : 0) + (gsr ? kGsrDim : 0) + (emg ? kEmgDim : 0);
    }
    bool empty() const { return !eeg && !gsr && !emg; }
    bool subset_of(const SensorMask& other) const {
        return (!eeg || other.eeg) && (!gsr || other.gsr) && (!emg || other.emg);
    }
    bool operator==(const SensorMask& other) const = default;

    std::string to_string() const;          // e.g. "EEG+GSR"
    static SensorMask parse(std::string_view text); // throws EmptyMask / OutOfRange
};

/// The seven non-empty masks in canonical report order.
const std::array<SensorMask, 7>& all_masks();

/// Feature names for a mask, canonical order (EEG block, GSR block, EMG block).
std::vector<std::string> feature_names(const SensorMask& mask);

/// One extracted instance: the full 58-dimension vector.
struct FeatureVector {
    static constexpr size_t kDim =
        SensorMask::kEegDim + SensorMask::kGsrDim + SensorMask::kEmgDim;
    std::array<double, kDim> values{};
};

} // namespace emosig::features
