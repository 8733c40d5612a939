#include "emosig/eval/metrics.hpp"

#include "emosig/errors.hpp"

namespace emosig::eval {

namespace {

void fill_metrics(EvaluationReport& report) {
    const auto& m = report.confusion;
    size_t total = 0, correct = 0;
    for (int g = 0; g < 2; ++g) {
        for (int p = 0; p < 2; ++p) total += m[g][p];
        correct += m[g][g];
    }
    for (int c = 0; c < 2; ++c) {
        const double tp = static_cast<double>(m[c][c]);
        const double fp = static_cast<double>(m[1 - c][c]);
        const double fn = static_cast<double>(m[c][1 - c]);
        ClassMetrics& cm = report.per_class[static_cast<size_t>(c)];
        cm.precision = tp + fp > 0.0 ? tp / (tp + fp) : 0.0;
        cm.recall = tp + fn > 0.0 ? tp / (tp + fn) : 0.0;
        cm.f1 = cm.precision + cm.recall > 0.0
                    ? 2.0 * cm.precision * cm.recall / (cm.precision + cm.recall)
                    : 0.0;
    }
    report.macro.precision = 0.5 * (report.per_class[0].precision + report.per_class[1].precision);
    report.macro.recall = 0.5 * (report.per_class[0].recall + report.per_class[1].recall);
    report.macro.f1 = 0.5 * (report.per_class[0].f1 + report.per_class[1].f1);
    report.accuracy = total > 0 ? static_cast<double>(correct) / static_cast<double>(total) : 0.0;
}

} // namespace

EvaluationReport macro_metrics(const FoldPredictions& predictions) {
    EvaluationReport report;
    for (const FoldPrediction& p : predictions.items) {
        const size_t g = p.gold == Label::High ? 1 : 0;
        const size_t pr = p.predicted == Label::High ? 1 : 0;
        ++report.confusion[g][pr];
    }
    fill_metrics(report);
    report.predictions = predictions;
    return report;
}

EvaluationReport metrics_from_confusion(const std::array<std::array<size_t, 2>, 2>& confusion) {
    EvaluationReport report;
    report.confusion = confusion;
    fill_metrics(report);
    return report;
}

} // namespace emosig::eval
