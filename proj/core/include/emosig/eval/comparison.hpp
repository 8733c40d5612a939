#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "emosig/eval/loo.hpp"
#include "emosig/eval/mcnemar.hpp"

namespace emosig::eval {

/// Published reference row for one (mask, target): the study's best
/// classifier for that setting and its macro scores.
struct PaperReference {
    std::string mask;
    classify::Target target = classify::Target::Arousal;
    std::string classifier; // "SVM", "J48", "NB", or "SVM/J48"
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
};

const std::vector<PaperReference>& paper_references();

/// Reference F1 for (mask, algorithm, target) when the published row for
/// that mask/target was produced by that algorithm.
std::optional<double> reference_f1(const features::SensorMask& mask,
                                   classify::Algorithm algorithm, classify::Target target);

struct GridCell {
    features::SensorMask mask;
    classify::Algorithm algorithm = classify::Algorithm::NaiveBayes;
    classify::Target target = classify::Target::Arousal;
    EvaluationReport report;
    std::optional<double> reference;      // published F1, when applicable
    bool best = false;                    // best F1 for this target
    std::optional<McNemarResult> vs_best; // unset on the best cell itself
};

struct ComparisonGrid {
    std::vector<GridCell> cells; // 7 masks x 3 classifiers x 2 targets
};

/// Full sensor-combination grid: LOO macro metrics per mask, classifier and
/// target; best-F1 setting per target marked; McNemar p-values between the
/// best setting and every other setting of the same target.
ComparisonGrid run_comparison(const classify::ClassifierSpec& base_spec,
                              const features::Dataset& dataset,
                              const LooOptions& options = {});

nlohmann::json grid_to_json(const ComparisonGrid& grid);
void write_grid_json(std::ostream& out, const ComparisonGrid& grid);
void write_grid_json(const std::filesystem::path& path, const ComparisonGrid& grid);
void write_grid_csv(std::ostream& out, const ComparisonGrid& grid);
void write_grid_csv(const std::filesystem::path& path, const ComparisonGrid& grid);

/// Console-style one-line-per-cell table.
void print_grid(std::ostream& out, const ComparisonGrid& grid);

} // namespace emosig::eval
