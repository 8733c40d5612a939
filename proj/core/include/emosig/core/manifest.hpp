#pragma once

#include <filesystem>
#include <map>
#include <string>

#include "emosig/core/protocol.hpp"
#include "emosig/core/types.hpp"
#include "emosig/core/video_table.hpp"

namespace emosig {

/// Describes one recording session: where each channel's trace file lives
/// plus the protocol timeline it was recorded under.
struct SessionManifest {
    std::string subject_id;
    std::map<SensorKind, std::string> channels; // kind -> trace file path
    ProtocolTimeline timeline;
    std::string session_start; // ISO-8601, informational only
};

/// Parses the manifest JSON document. All six channels must be present and
/// every video id must exist in the label table.
SessionManifest parse_manifest(const std::string& text,
                               const VideoLabelTable& table = default_video_table());

/// Reads and parses a manifest file; relative channel paths are resolved
/// against the manifest's directory.
SessionManifest load_manifest(const std::filesystem::path& path,
                              const VideoLabelTable& table = default_video_table());

/// Inverse of parse_manifest.
std::string serialize_manifest(const SessionManifest& manifest);

/// Trace CSV: header line `# kind=<sensor_kind> rate_hz=<real>`, then one
/// sample per line. The header rate must match the expected rate for `kind`.
RawTrace load_trace(const std::filesystem::path& path, SensorKind kind);

void save_trace(const std::filesystem::path& path, const RawTrace& trace);

} // namespace emosig
