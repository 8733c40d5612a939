#pragma once

#include <cstdint>
#include <vector>

namespace emosig {

/// Session timeline: each trial is a 3 s trial-number screen, a 30 s baseline
/// video, then two 60 s stimulus videos.
struct ProtocolTimeline {
    int trial_count = 4;
    double trial_screen_s = 3.0;
    double baseline_s = 30.0;
    double video_s = 60.0;
    int videos_per_trial = 2;
    std::vector<int> video_order; // length trial_count * videos_per_trial

    double trial_duration_s() const {
        return trial_screen_s + baseline_s + videos_per_trial * video_s;
    }
    double session_duration_s() const { return trial_count * trial_duration_s(); }

    /// Throws MalformedManifest on inconsistent counts or duplicate video ids.
    void validate() const;
};

/// Returns the default 4-trial timeline with the stock eight-video order.
ProtocolTimeline default_timeline();

struct VideoWindow {
    int video_id = 0;
    double start_s = 0.0;
    double end_s = 0.0;
};

struct TrialSegment {
    int trial_index = 0; // 1-based
    double baseline_start_s = 0.0;
    double baseline_end_s = 0.0;
    std::vector<VideoWindow> videos;
};

/// Cuts the session into per-trial windows. Trial k (1-based) starts at
/// (k-1) * trial_duration; baseline spans [start+3, start+33), videos
/// [start+33, start+93) and [start+93, start+153) on the default timeline.
std::vector<TrialSegment> segment_session(const ProtocolTimeline& timeline);

} // namespace emosig
