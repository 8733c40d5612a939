#pragma once

#include <vector>

#include "emosig/classify/classifier.hpp"
#include "emosig/eval/metrics.hpp"
#include "emosig/features/dataset.hpp"

namespace emosig::eval {

enum class LooMode {
    Instance, // hold out one instance per fold
    Subject,  // hold out all instances of one subject per fold
};

struct LooOptions {
    LooMode mode = LooMode::Instance;
    int threads = 0; // <= 0 means hardware concurrency
};

/// Leak-check instrumentation: per fold, the ids of the training instances
/// and (for the SVM) the normalization statistics the fold derived.
struct LooAudit {
    struct Fold {
        std::vector<std::string> test_ids;
        std::vector<std::string> training_ids;
        std::vector<double> feature_min;   // SVM only
        std::vector<double> feature_scale; // SVM only
    };
    std::vector<Fold> folds;
};

/// Leave-one-out evaluation: fold k trains on everything but instance (or
/// subject) k and predicts the held-out part. Data-dependent statistics are
/// recomputed inside every fold. Folds run in parallel; the assembled
/// predictions follow dataset order.
EvaluationReport loo_evaluate(const classify::ClassifierSpec& spec,
                              const features::Dataset& dataset, classify::Target target,
                              const LooOptions& options = {}, LooAudit* audit = nullptr);

} // namespace emosig::eval
