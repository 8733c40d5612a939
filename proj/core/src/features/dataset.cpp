#include "emosig/features/dataset.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "emosig/errors.hpp"

namespace emosig::features {

Dataset build_dataset(const std::vector<SessionFeatures>& sessions,
                      const VideoLabelTable& table) {
    Dataset ds;
    ds.mask = SensorMask{true, true, true};
    std::set<std::pair<std::string, int>> seen;
    for (const SessionFeatures& session : sessions) {
        for (const SessionFeatures::VideoFeatures& video : session.videos) {
            if (!seen.insert({session.subject_id, video.video_id}).second) {
                throw DuplicateInstance("duplicate instance " + session.subject_id + "/" +
                                        std::to_string(video.video_id));
            }
            const VideoLabels labels = lookup_video_labels(table, video.video_id);
            if (labels.valence == Label::Unassigned || labels.arousal == Label::Unassigned) {
                continue; // dead-zone scores never enter a dataset
            }
            LabeledInstance inst;
            inst.subject_id = session.subject_id;
            inst.video_id = video.video_id;
            inst.features.assign(video.features.values.begin(), video.features.values.end());
            inst.valence = labels.valence;
            inst.arousal = labels.arousal;
            ds.instances.push_back(std::move(inst));
        }
    }
    return ds;
}

Dataset project_sensors(const Dataset& dataset, const SensorMask& mask) {
    if (mask.empty()) throw EmptyMask("projection mask selects no blocks");
    if (!mask.subset_of(dataset.mask)) {
        throw EmptyMask("projection mask is not a subset of the dataset mask");
    }
    if (mask == dataset.mask) return dataset;

    // offsets of each block within the dataset's current layout
    size_t offset = 0;
    const size_t eeg_off = offset;
    if (dataset.mask.eeg) offset += SensorMask::kEegDim;
    const size_t gsr_off = offset;
    if (dataset.mask.gsr) offset += SensorMask::kGsrDim;
    const size_t emg_off = offset;

    Dataset out;
    out.mask = mask;
    out.instances.reserve(dataset.instances.size());
    for (const LabeledInstance& inst : dataset.instances) {
        LabeledInstance copy;
        copy.subject_id = inst.subject_id;
        copy.video_id = inst.video_id;
        copy.valence = inst.valence;
        copy.arousal = inst.arousal;
        copy.features.reserve(mask.dimension());
        auto take = [&](size_t off, size_t dim) {
            copy.features.insert(copy.features.end(), inst.features.begin() + off,
                                 inst.features.begin() + off + dim);
        };
        if (mask.eeg) take(eeg_off, SensorMask::kEegDim);
        if (mask.gsr) take(gsr_off, SensorMask::kGsrDim);
        if (mask.emg) take(emg_off, SensorMask::kEmgDim);
        out.instances.push_back(std::move(copy));
    }
    return out;
}

void write_dataset_csv(std::ostream& out, const Dataset& dataset) {
    const std::vector<std::string> names = feature_names(dataset.mask);
    for (const std::string& name : names) out << name << ",";
    out << "subject_id,video_id,valence,arousal\n";

    char buf[32];
    for (const LabeledInstance& inst : dataset.instances) {
        for (double v : inst.features) {
            std::snprintf(buf, sizeof buf, "%.12g", v);
            out << buf << ",";
        }
        out << inst.subject_id << "," << inst.video_id << "," << to_string(inst.valence)
            << "," << to_string(inst.arousal) << "\n";
    }
}

void write_dataset_csv(const std::filesystem::path& path, const Dataset& dataset) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write feature CSV: " + path.string());
    write_dataset_csv(out, dataset);
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

SensorMask mask_from_header(const std::vector<std::string>& fields, size_t feature_count) {
    SensorMask mask{false, false, false};
    for (size_t i = 0; i < feature_count; ++i) {
        if (fields[i].rfind("eeg_", 0) == 0) mask.eeg = true;
        else if (fields[i].rfind("gsr_", 0) == 0) mask.gsr = true;
        else if (fields[i].rfind("emg_", 0) == 0) mask.emg = true;
    }
    return mask;
}

} // namespace

Dataset read_dataset_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw Error("empty feature CSV");
    const std::vector<std::string> header = split_csv_line(line);
    if (header.size() < 5) throw Error("feature CSV header too short");
    const size_t feature_count = header.size() - 4;
    if (header[feature_count] != "subject_id" || header[feature_count + 1] != "video_id" ||
        header[feature_count + 2] != "valence" || header[feature_count + 3] != "arousal") {
        throw Error("feature CSV metadata columns must be subject_id,video_id,valence,arousal");
    }

    Dataset ds;
    ds.mask = mask_from_header(header, feature_count);
    if (feature_names(ds.mask) != std::vector<std::string>(header.begin(),
                                                           header.begin() + feature_count)) {
        throw Error("feature CSV header does not match the canonical feature names");
    }

    size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const std::vector<std::string> fields = split_csv_line(line);
        if (fields.size() != header.size()) {
            throw Error("feature CSV row " + std::to_string(line_no) + " has " +
                        std::to_string(fields.size()) + " fields, expected " +
                        std::to_string(header.size()));
        }
        LabeledInstance inst;
        inst.features.reserve(feature_count);
        for (size_t i = 0; i < feature_count; ++i) {
            char* end = nullptr;
            const double v = std::strtod(fields[i].c_str(), &end);
            if (end == fields[i].c_str() || !std::isfinite(v)) {
                throw Error("bad feature value at CSV row " + std::to_string(line_no));
            }
            inst.features.push_back(v);
        }
        inst.subject_id = fields[feature_count];
        inst.video_id = std::stoi(fields[feature_count + 1]);
        inst.valence = label_from_string(fields[feature_count + 2]);
        inst.arousal = label_from_string(fields[feature_count + 3]);
        ds.instances.push_back(std::move(inst));
    }
    return ds;
}

Dataset read_dataset_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open feature CSV: " + path.string());
    return read_dataset_csv(in);
}

} // namespace emosig::features
