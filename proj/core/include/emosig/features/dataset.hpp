#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "emosig/core/types.hpp"
#include "emosig/core/video_table.hpp"
#include "emosig/features/feature_vector.hpp"

namespace emosig::features {

struct LabeledInstance {
    std::string subject_id;
    int video_id = 0;
    std::vector<double> features;
    Label valence = Label::Unassigned;
    Label arousal = Label::Unassigned;

    std::string id() const { return subject_id + "/" + std::to_string(video_id); }
};

struct Dataset {
    std::vector<LabeledInstance> instances;
    SensorMask mask;
};

/// Features of one processed session, one full 58-vector per video.
struct SessionFeatures {
    std::string subject_id;
    struct VideoFeatures {
        int video_id = 0;
        FeatureVector features;
    };
    std::vector<VideoFeatures> videos;
};

/// One instance per (subject, video); labels from the table's scores.
/// Instances with an Unassigned label are excluded. Throws DuplicateInstance
/// when the same subject/video pair appears twice.
Dataset build_dataset(const std::vector<SessionFeatures>& sessions,
                      const VideoLabelTable& table = default_video_table());

/// Keeps only the blocks named by `mask` (must be a non-empty subset of the
/// dataset's mask); canonical order preserved.
Dataset project_sensors(const Dataset& dataset, const SensorMask& mask);

/// CSV: feature columns (canonical names), then subject_id, video_id,
/// valence, arousal.
void write_dataset_csv(std::ostream& out, const Dataset& dataset);
void write_dataset_csv(const std::filesystem::path& path, const Dataset& dataset);
Dataset read_dataset_csv(std::istream& in);
Dataset read_dataset_csv(const std::filesystem::path& path);

} // namespace emosig::features
