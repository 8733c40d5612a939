#pragma once

#include <map>
#include <string>
#include <utility>

#include "emosig/core/types.hpp"

namespace emosig {

/// Quadrant of the valence/arousal plane a stimulus video belongs to.
enum class EmotionClass { LAHV, LALV, HAHV, HALV };

std::string_view to_string(EmotionClass c);

struct VideoEntry {
    double arousal_score = 0.0; // 1-9
    double valence_score = 0.0; // 1-9
    EmotionClass emotion = EmotionClass::LAHV;
};

struct VideoLabelTable {
    std::map<int, VideoEntry> entries;

    bool contains(int video_id) const { return entries.count(video_id) != 0; }
    const VideoEntry& at(int video_id) const; // throws UnknownVideo
};

/// The stock eight-video table. Scores are the midpoints of each class's
/// published range, which keeps every score on the correct side of both
/// discretization thresholds.
const VideoLabelTable& default_video_table();

/// score <= 4.5 -> Low; score >= 6 -> High; otherwise Unassigned.
/// Throws OutOfRange outside [1, 9].
Label discretize_score(double score);

/// Valence and arousal labels for a video, via discretization of its scores.
struct VideoLabels {
    Label valence = Label::Unassigned;
    Label arousal = Label::Unassigned;
};
VideoLabels lookup_video_labels(const VideoLabelTable& table, int video_id);

} // namespace emosig
