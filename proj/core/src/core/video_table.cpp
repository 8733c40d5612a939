#include "emosig/core/video_table.hpp"

#include <cmath>

#include "emosig/errors.hpp"

namespace emosig {

std::string_view to_string(EmotionClass c) {
    switch (c) {
        case EmotionClass::LAHV: return "LAHV";
        case EmotionClass::LALV: return "LALV";
        case EmotionClass::HAHV: return "HAHV";
        case EmotionClass::HALV: return "HALV";
    }
    return "?";
}

const VideoEntry& VideoLabelTable::at(int video_id) const {
    auto it = entries.find(video_id);
    if (it == entries.end()) {
        throw UnknownVideo("video id " + std::to_string(video_id) + " not in label table");
    }
    return it->second;
}

const VideoLabelTable& default_video_table() {
    // Per-video scores are the midpoints of the class score ranges:
    //   LAHV: arousal [3.86, 4.21], valence [6.57, 7.13]  -> videos 24, 80
    //   LALV: arousal [2.75, 2.93], valence [3.25, 3.33]  -> videos 41, 96
    //   HAHV: arousal [6.40, 7.33], valence [7.07, 7.20]  -> videos 63, 88
    //   HALV: arousal [6.13, 6.33], valence [3.53, 3.93]  -> videos 56, 111
    static const VideoLabelTable table = [] {
        VideoLabelTable t;
        auto add = [&t](int id, double arousal, double valence, EmotionClass c) {
            t.entries[id] = VideoEntry{arousal, valence, c};
        };
        add(24, 4.035, 6.85, EmotionClass::LAHV);
        add(80, 4.035, 6.85, EmotionClass::LAHV);
        add(41, 2.84, 3.29, EmotionClass::LALV);
        add(96, 2.84, 3.29, EmotionClass::LALV);
        add(63, 6.865, 7.135, EmotionClass::HAHV);
        add(88, 6.865, 7.135, EmotionClass::HAHV);
        add(56, 6.23, 3.73, EmotionClass::HALV);
        add(111, 6.23, 3.73, EmotionClass::HALV);
        return t;
    }();
    return table;
}

Label discretize_score(double score) {
    if (!std::isfinite(score) || score < 1.0 || score > 9.0) {
        throw OutOfRange("score must lie in [1, 9]");
    }
    if (score <= 4.5) return Label::Low;
    if (score >= 6.0) return Label::High;
    return Label::Unassigned;
}

VideoLabels lookup_video_labels(const VideoLabelTable& table, int video_id) {
    const VideoEntry& e = table.at(video_id);
    return VideoLabels{discretize_score(e.valence_score), discretize_score(e.arousal_score)};
}

} // namespace emosig
