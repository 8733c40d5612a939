#include "emosig/core/manifest.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "emosig/errors.hpp"

namespace emosig {

using nlohmann::json;

SessionManifest parse_manifest(const std::string& text, const VideoLabelTable& table) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw MalformedManifest(std::string("manifest is not valid JSON: ") + e.what());
    }

    SessionManifest m;
    try {
        m.subject_id = doc.at("subject_id").get<std::string>();
        if (doc.contains("session_start")) {
            m.session_start = doc.at("session_start").get<std::string>();
        }

        const json& channels = doc.at("channels");
        for (auto& [name, path] : channels.items()) {
            m.channels[sensor_kind_from_string(name)] = path.get<std::string>();
        }

        const json& tl = doc.at("timeline");
        m.timeline = default_timeline();
        m.timeline.trial_count = tl.at("trial_count").get<int>();
        m.timeline.video_order = tl.at("video_order").get<std::vector<int>>();
    } catch (const json::exception& e) {
        throw MalformedManifest(std::string("manifest is missing required fields: ") + e.what());
    }

    if (m.timeline.trial_count < 1) {
        throw MalformedManifest("trial_count must be positive");
    }
    if (m.timeline.video_order.empty() ||
        m.timeline.video_order.size() % static_cast<size_t>(m.timeline.trial_count) != 0) {
        throw MalformedManifest("video_order length must be a multiple of trial_count");
    }
    m.timeline.videos_per_trial =
        static_cast<int>(m.timeline.video_order.size()) / m.timeline.trial_count;
    m.timeline.validate();

    for (SensorKind kind : kAllSensorKinds) {
        if (m.channels.find(kind) == m.channels.end()) {
            throw MissingChannel("manifest lacks channel " + std::string(to_string(kind)));
        }
    }
    for (int id : m.timeline.video_order) {
        if (!table.contains(id)) {
            throw UnknownVideo("video id " + std::to_string(id) + " not in label table");
        }
    }
    return m;
}

SessionManifest load_manifest(const std::filesystem::path& path, const VideoLabelTable& table) {
    std::ifstream in(path);
    if (!in) throw MalformedManifest("cannot open manifest: " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    SessionManifest m = parse_manifest(ss.str(), table);
    const auto base = path.parent_path();
    for (auto& [kind, file] : m.channels) {
        std::filesystem::path p(file);
        if (p.is_relative()) m.channels[kind] = (base / p).string();
    }
    return m;
}

std::string serialize_manifest(const SessionManifest& manifest) {
    json channels = json::object();
    for (const auto& [kind, path] : manifest.channels) {
        channels[std::string(to_string(kind))] = path;
    }
    json doc = {
        {"subject_id", manifest.subject_id},
        {"channels", channels},
        {"timeline",
         {{"trial_count", manifest.timeline.trial_count},
          {"video_order", manifest.timeline.video_order}}},
        {"session_start", manifest.session_start},
    };
    return doc.dump(2) + "\n";
}

RawTrace load_trace(const std::filesystem::path& path, SensorKind kind) {
    std::ifstream in(path);
    if (!in) throw MalformedTrace("cannot open trace: " + path.string());

    std::string header;
    if (!std::getline(in, header)) throw MalformedTrace("empty trace file: " + path.string());

    std::string kind_name;
    double rate = 0.0;
    {
        char kind_buf[64] = {0};
        if (std::sscanf(header.c_str(), "# kind=%63s rate_hz=%lf", kind_buf, &rate) != 2) {
            throw MalformedTrace("bad trace header in " + path.string() + ": " + header);
        }
        kind_name = kind_buf;
    }
    if (kind_name != to_string(kind)) {
        throw MalformedTrace("trace " + path.string() + " holds channel " + kind_name +
                             ", expected " + std::string(to_string(kind)));
    }
    const double expected = expected_rate_hz(kind);
    if (!(rate > 0.0) || std::abs(rate - expected) > 1e-9 * expected) {
        throw RateMismatch("trace " + path.string() + " header rate " + std::to_string(rate) +
                           " Hz, expected " + std::to_string(expected) + " Hz for " +
                           std::string(to_string(kind)));
    }

    RawTrace trace;
    trace.kind = kind;
    trace.rate_hz = rate;

    std::string line;
    size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        char* end = nullptr;
        const double v = std::strtod(line.c_str(), &end);
        if (end == line.c_str()) {
            throw MalformedTrace("unparseable sample at " + path.string() + ":" +
                                 std::to_string(line_no));
        }
        if (!std::isfinite(v)) {
            throw NonFinite("non-finite sample at " + path.string() + ":" +
                            std::to_string(line_no));
        }
        trace.samples.push_back(v);
    }
    return trace;
}

void save_trace(const std::filesystem::path& path, const RawTrace& trace) {
    std::ofstream out(path);
    if (!out) throw MalformedTrace("cannot write trace: " + path.string());
    char buf[64];
    std::snprintf(buf, sizeof buf, "# kind=%s rate_hz=%.10g\n",
                  std::string(to_string(trace.kind)).c_str(), trace.rate_hz);
    out << buf;
    for (double v : trace.samples) {
        std::snprintf(buf, sizeof buf, "%.10g\n", v);
        out << buf;
    }
}

} // namespace emosig
