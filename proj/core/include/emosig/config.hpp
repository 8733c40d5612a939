#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "emosig/classify/classifier.hpp"
#include "emosig/eval/loo.hpp"
#include "emosig/pipeline.hpp"
#include "emosig/synth/generate.hpp"

namespace emosig {

/// Everything the CLI can tune, with defaults reproducing the stock
/// configuration. Loaded from JSON; flag overrides are applied on top.
struct PipelineConfig {
    DspConfig dsp;
    classify::ClassifierSpec classifiers;
    eval::LooMode loo_mode = eval::LooMode::Instance;
    int threads = 0;
    int synth_subjects = 19;
    synth::ModulationSpec modulation;

    void validate() const;
};

PipelineConfig config_from_json(const nlohmann::json& doc);
nlohmann::json config_to_json(const PipelineConfig& config);
PipelineConfig load_config(const std::filesystem::path& path);

} // namespace emosig
