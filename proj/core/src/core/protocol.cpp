#include "emosig/core/protocol.hpp"

#include <set>

#include "emosig/errors.hpp"

namespace emosig {

void ProtocolTimeline::validate() const {
    if (trial_count < 1) throw MalformedManifest("trial_count must be positive");
    if (videos_per_trial < 1) throw MalformedManifest("videos_per_trial must be positive");
    if (trial_screen_s < 0 || baseline_s <= 0 || video_s <= 0) {
        throw MalformedManifest("timeline durations must be positive");
    }
    const size_t expected = static_cast<size_t>(trial_count) * videos_per_trial;
    if (video_order.size() != expected) {
        throw MalformedManifest("video_order must list trial_count * videos_per_trial ids");
    }
    std::set<int> seen;
    for (int id : video_order) {
        if (!seen.insert(id).second) {
            throw MalformedManifest("video_order contains duplicate id " + std::to_string(id));
        }
    }
}

ProtocolTimeline default_timeline() {
    ProtocolTimeline t;
    // Stock order: arousal-ascending presentation of the eight videos.
    t.video_order = {41, 96, 24, 80, 56, 111, 63, 88};
    return t;
}

std::vector<TrialSegment> segment_session(const ProtocolTimeline& timeline) {
    timeline.validate();
    std::vector<TrialSegment> segments;
    segments.reserve(timeline.trial_count);
    size_t order_pos = 0;
    for (int k = 0; k < timeline.trial_count; ++k) {
        TrialSegment seg;
        seg.trial_index = k + 1;
        const double start = k * timeline.trial_duration_s();
        seg.baseline_start_s = start + timeline.trial_screen_s;
        seg.baseline_end_s = seg.baseline_start_s + timeline.baseline_s;
        double cursor = seg.baseline_end_s;
        for (int v = 0; v < timeline.videos_per_trial; ++v) {
            VideoWindow w;
            w.video_id = timeline.video_order[order_pos++];
            w.start_s = cursor;
            w.end_s = cursor + timeline.video_s;
            cursor = w.end_s;
            seg.videos.push_back(w);
        }
        segments.push_back(std::move(seg));
    }
    return segments;
}

} // namespace emosig
