#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>

#include "doctest.h"
#include "emosig/core/manifest.hpp"
#include "emosig/core/protocol.hpp"
#include "emosig/core/video_table.hpp"
#include "emosig/errors.hpp"

using namespace emosig;
namespace fs = std::filesystem;

namespace {

std::string manifest_text(const std::set<std::string>& drop_channels = {},
                          std::vector<int> order = {41, 96, 24, 80, 56, 111, 63, 88}) {
    std::string channels;
    for (SensorKind kind : kAllSensorKinds) {
        const std::string name(to_string(kind));
        if (drop_channels.count(name)) continue;
        if (!channels.empty()) channels += ",";
        channels += "\"" + name + "\":\"" + name + ".csv\"";
    }
    std::string ids;
    for (int id : order) {
        if (!ids.empty()) ids += ",";
        ids += std::to_string(id);
    }
    return "{\"subject_id\":\"s01\",\"channels\":{" + channels +
           "},\"timeline\":{\"trial_count\":4,\"video_order\":[" + ids +
           "]},\"session_start\":\"2017-03-01T10:00:00Z\"}";
}

fs::path temp_file(const std::string& name, const std::string& content) {
    const fs::path path = fs::temp_directory_path() / name;
    std::ofstream out(path);
    out << content;
    return path;
}

} // namespace

TEST_CASE("parse_manifest accepts a well-formed document") {
    const SessionManifest m = parse_manifest(manifest_text());
    CHECK(m.subject_id == "s01");
    CHECK(m.channels.size() == 6);
    CHECK(m.timeline.trial_count == 4);
    CHECK(m.timeline.videos_per_trial == 2);
    REQUIRE(m.timeline.video_order.size() == 8);
    CHECK(m.timeline.video_order[2] == 24);
}

TEST_CASE("parse_manifest rejects a missing channel") {
    CHECK_THROWS_AS(parse_manifest(manifest_text({"EMG_ch2"})), MissingChannel);
}

TEST_CASE("parse_manifest rejects an unknown video id") {
    CHECK_THROWS_AS(parse_manifest(manifest_text({}, {41, 96, 24, 80, 56, 111, 63, 999})),
                    UnknownVideo);
}

TEST_CASE("parse_manifest rejects bad syntax") {
    CHECK_THROWS_AS(parse_manifest("not json"), MalformedManifest);
    CHECK_THROWS_AS(parse_manifest("{}"), MalformedManifest);
}

TEST_CASE("manifest serialization round-trips") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        SessionManifest m;
        m.subject_id = "subject_" + std::to_string(rng() % 1000);
        for (SensorKind kind : kAllSensorKinds) {
            m.channels[kind] = "path_" + std::to_string(rng() % 1000) + ".csv";
        }
        m.timeline = default_timeline();
        std::shuffle(m.timeline.video_order.begin(), m.timeline.video_order.end(), rng);
        m.session_start = "2017-03-0" + std::to_string(1 + rng() % 9) + "T10:00:00Z";

        const SessionManifest parsed = parse_manifest(serialize_manifest(m));
        CHECK(parsed.subject_id == m.subject_id);
        CHECK(parsed.channels == m.channels);
        CHECK(parsed.timeline.video_order == m.timeline.video_order);
        CHECK(parsed.session_start == m.session_start);
    }
}

TEST_CASE("load_trace reads a conforming EEG file") {
    const fs::path path =
        temp_file("emosig_eeg.csv", "# kind=EEG_raw rate_hz=512\n1.5\n-2.25\n0\n");
    const RawTrace trace = load_trace(path, SensorKind::EegRaw);
    CHECK(trace.rate_hz == doctest::Approx(512.0));
    REQUIRE(trace.samples.size() == 3);
    CHECK(trace.samples[1] == doctest::Approx(-2.25));
}

TEST_CASE("load_trace rejects a GSR file claiming 512 Hz") {
    const fs::path path = temp_file("emosig_gsr.csv", "# kind=GSR rate_hz=512\n1\n");
    CHECK_THROWS_AS(load_trace(path, SensorKind::Gsr), RateMismatch);
}

TEST_CASE("load_trace rejects NaN samples") {
    const fs::path path = temp_file("emosig_nan.csv", "# kind=GSR rate_hz=128\n1\nnan\n");
    CHECK_THROWS_AS(load_trace(path, SensorKind::Gsr), NonFinite);
}

TEST_CASE("load_trace rejects malformed rows and headers") {
    CHECK_THROWS_AS(load_trace(temp_file("emosig_bad1.csv", "no header\n1\n"),
                               SensorKind::Gsr),
                    MalformedTrace);
    CHECK_THROWS_AS(load_trace(temp_file("emosig_bad2.csv",
                                         "# kind=GSR rate_hz=128\nabc\n"),
                               SensorKind::Gsr),
                    MalformedTrace);
}

TEST_CASE("trace save/load round-trips") {
    RawTrace t;
    t.kind = SensorKind::Gsr;
    t.rate_hz = 128.0;
    t.samples = {5.125, -0.25, 3.0, 0.0001220703125};
    const fs::path path = fs::temp_directory_path() / "emosig_roundtrip.csv";
    save_trace(path, t);
    const RawTrace back = load_trace(path, SensorKind::Gsr);
    REQUIRE(back.samples.size() == t.samples.size());
    for (size_t i = 0; i < t.samples.size(); ++i) {
        CHECK(back.samples[i] == doctest::Approx(t.samples[i]).epsilon(1e-9));
    }
}

TEST_CASE("segment_session lays out the default timeline") {
    const auto segments = segment_session(default_timeline());
    REQUIRE(segments.size() == 4);

    CHECK(segments[0].baseline_start_s == doctest::Approx(3.0));
    CHECK(segments[0].baseline_end_s == doctest::Approx(33.0));
    REQUIRE(segments[0].videos.size() == 2);
    CHECK(segments[0].videos[0].start_s == doctest::Approx(33.0));
    CHECK(segments[0].videos[0].end_s == doctest::Approx(93.0));
    CHECK(segments[0].videos[1].start_s == doctest::Approx(93.0));
    CHECK(segments[0].videos[1].end_s == doctest::Approx(153.0));

    // trial 4 starts at 459 s and its last video ends at 612 s
    CHECK(segments[3].baseline_start_s == doctest::Approx(459.0 + 3.0));
    CHECK(segments[3].videos[1].end_s == doctest::Approx(612.0));
}

TEST_CASE("segment_session handles a single-trial timeline") {
    ProtocolTimeline t = default_timeline();
    t.trial_count = 1;
    t.video_order = {24, 80};
    const auto segments = segment_session(t);
    REQUIRE(segments.size() == 1);
    CHECK(segments[0].videos.size() == 2);
}

TEST_CASE("segment windows are disjoint, ordered, and cover each video once") {
    for (int trials : {1, 2, 4}) {
        ProtocolTimeline t = default_timeline();
        t.trial_count = trials;
        t.video_order.resize(static_cast<size_t>(trials) * 2);
        const auto segments = segment_session(t);

        double cursor = 0.0;
        std::set<int> seen;
        for (const TrialSegment& seg : segments) {
            CHECK(seg.baseline_start_s >= cursor);
            CHECK(seg.baseline_end_s - seg.baseline_start_s == doctest::Approx(30.0));
            cursor = seg.baseline_end_s;
            for (const VideoWindow& v : seg.videos) {
                CHECK(v.start_s >= cursor);
                CHECK(v.end_s - v.start_s == doctest::Approx(60.0));
                cursor = v.end_s;
                CHECK(seen.insert(v.video_id).second);
            }
        }
        CHECK(seen.size() == static_cast<size_t>(trials) * 2);
    }
}

TEST_CASE("discretize_score thresholds") {
    CHECK(discretize_score(4.5) == Label::Low);
    CHECK(discretize_score(6.57) == Label::High);
    CHECK(discretize_score(6.0) == Label::High);
    CHECK(discretize_score(5.2) == Label::Unassigned);
    CHECK(discretize_score(1.0) == Label::Low);
    CHECK(discretize_score(9.0) == Label::High);
    CHECK_THROWS_AS(discretize_score(0.5), OutOfRange);
    CHECK_THROWS_AS(discretize_score(9.5), OutOfRange);
}

TEST_CASE("discretize_score is monotone") {
    auto rank = [](Label l) { return l == Label::Low ? 0 : (l == Label::Unassigned ? 1 : 2); };
    double prev_score = 1.0;
    Label prev = discretize_score(prev_score);
    for (double s = 1.0; s <= 9.0; s += 0.01) {
        const Label cur = discretize_score(s);
        CHECK(rank(cur) >= rank(prev));
        prev = cur;
    }
}

TEST_CASE("video labels match their class letters") {
    const VideoLabelTable& table = default_video_table();
    REQUIRE(table.entries.size() == 8);
    const std::set<int> expected = {24, 80, 41, 96, 63, 88, 56, 111};
    for (int id : expected) CHECK(table.contains(id));

    for (const auto& [id, entry] : table.entries) {
        const VideoLabels labels = lookup_video_labels(table, id);
        const std::string name(to_string(entry.emotion));
        CHECK(labels.arousal == (name[0] == 'H' ? Label::High : Label::Low));
        CHECK(labels.valence == (name[2] == 'H' ? Label::High : Label::Low));
    }
}

TEST_CASE("lookup_video_labels spot checks") {
    const VideoLabelTable& table = default_video_table();
    const VideoLabels v24 = lookup_video_labels(table, 24);
    CHECK(v24.valence == Label::High);
    CHECK(v24.arousal == Label::Low);
    const VideoLabels v96 = lookup_video_labels(table, 96);
    CHECK(v96.valence == Label::Low);
    CHECK(v96.arousal == Label::Low);
    const VideoLabels v63 = lookup_video_labels(table, 63);
    CHECK(v63.valence == Label::High);
    CHECK(v63.arousal == Label::High);
    CHECK_THROWS_AS(lookup_video_labels(table, 999), UnknownVideo);
}
