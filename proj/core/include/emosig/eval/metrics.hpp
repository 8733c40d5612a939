#pragma once

#include <array>
#include <string>
#include <vector>

#include "emosig/core/types.hpp"

namespace emosig::eval {

struct FoldPrediction {
    std::string instance_id;
    Label gold = Label::Low;
    Label predicted = Label::Low;
    double score = 0.0;
};

struct FoldPredictions {
    std::vector<FoldPrediction> items; // exactly one entry per dataset instance
};

struct ClassMetrics {
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
};

/// Confusion matrix is gold x predicted over {Low, High}. Zero-denominator
/// precision/recall are defined as 0.
struct EvaluationReport {
    std::array<std::array<size_t, 2>, 2> confusion{}; // [gold][predicted]
    std::array<ClassMetrics, 2> per_class{};          // [Low, High]
    ClassMetrics macro{};
    double accuracy = 0.0;
    FoldPredictions predictions;
};

EvaluationReport macro_metrics(const FoldPredictions& predictions);

/// Metrics recomputed from a bare confusion matrix (no fold predictions).
EvaluationReport metrics_from_confusion(const std::array<std::array<size_t, 2>, 2>& confusion);

} // namespace emosig::eval
