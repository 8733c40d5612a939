#pragma once

#include <cstddef>

#include "emosig/eval/metrics.hpp"

namespace emosig::eval {

enum class McNemarMethod {
    Auto,          // exact binomial when 0 < b+c < 25, else chi-square
    ChiSquareCC,   // continuity-corrected chi-square, 1 df
    ExactBinomial, // two-sided binomial(min(b,c); b+c, 0.5)
};

struct McNemarResult {
    size_t b = 0; // A correct, B wrong
    size_t c = 0; // A wrong, B correct
    double statistic = 0.0;
    double p_value = 1.0;
    McNemarMethod method = McNemarMethod::ChiSquareCC; // branch actually used
};

/// Paired comparison of two classifiers over the same instances.
/// Throws InstanceMismatch when the prediction sets do not cover identical
/// instances with identical gold labels.
McNemarResult mcnemar_test(const FoldPredictions& preds_a, const FoldPredictions& preds_b,
                           McNemarMethod method = McNemarMethod::Auto);

McNemarResult mcnemar_from_counts(size_t b, size_t c,
                                  McNemarMethod method = McNemarMethod::Auto);

/// Upper tail of the chi-square distribution with one degree of freedom.
double chi_square_1df_upper_tail(double statistic);

} // namespace emosig::eval
