#include "emosig/classify/naive_bayes.hpp"

#include <cmath>
#include <numbers>

#include <nlohmann/json.hpp>

#include "emosig/errors.hpp"

namespace emosig::classify {

std::unique_ptr<Model> train_naive_bayes(const ClassifierSpec& spec,
                                         const features::Dataset& dataset, Target target) {
    const size_t dim = dataset.mask.dimension();
    auto model = std::make_unique<NaiveBayesModel>(spec, target, dataset.mask);

    std::array<size_t, 2> counts{};
    for (int c = 0; c < 2; ++c) {
        model->means[c].assign(dim, 0.0);
        model->variances[c].assign(dim, 0.0);
    }
    for (const features::LabeledInstance& inst : dataset.instances) {
        const int c = target_label(inst, target) == Label::High ? 1 : 0;
        ++counts[c];
        for (size_t f = 0; f < dim; ++f) model->means[c][f] += inst.features[f];
    }
    const double total = static_cast<double>(dataset.instances.size());
    for (int c = 0; c < 2; ++c) {
        model->priors[c] = static_cast<double>(counts[c]) / total;
        if (counts[c] == 0) continue;
        for (size_t f = 0; f < dim; ++f) {
            model->means[c][f] /= static_cast<double>(counts[c]);
        }
    }
    for (const features::LabeledInstance& inst : dataset.instances) {
        const int c = target_label(inst, target) == Label::High ? 1 : 0;
        for (size_t f = 0; f < dim; ++f) {
            const double d = inst.features[f] - model->means[c][f];
            model->variances[c][f] += d * d;
        }
    }
    for (int c = 0; c < 2; ++c) {
        if (counts[c] == 0) continue;
        for (size_t f = 0; f < dim; ++f) {
            model->variances[c][f] = std::max(
                model->variances[c][f] / static_cast<double>(counts[c]),
                spec.nb.variance_floor);
        }
    }
    return model;
}

Prediction NaiveBayesModel::do_predict(std::span<const double> features) const {
    std::array<double, 2> log_post{};
    std::array<bool, 2> present{};
    for (int c = 0; c < 2; ++c) {
        present[c] = priors[c] > 0.0;
        if (!present[c]) continue;
        double lp = std::log(priors[c]);
        for (size_t f = 0; f < features.size(); ++f) {
            const double var = variances[c][f];
            const double d = features[f] - means[c][f];
            lp += -0.5 * std::log(2.0 * std::numbers::pi * var) - d * d / (2.0 * var);
        }
        log_post[c] = lp;
    }

    Prediction pred;
    if (!present[0] || !present[1]) {
        pred.label = present[1] ? Label::High : Label::Low;
        pred.score = 1.0;
        return pred;
    }
    // normalize the two log posteriors
    const double m = std::max(log_post[0], log_post[1]);
    const double e0 = std::exp(log_post[0] - m);
    const double e1 = std::exp(log_post[1] - m);
    const double p_high = e1 / (e0 + e1);
    if (p_high > 0.5) {
        pred.label = Label::High;
        pred.score = p_high;
    } else {
        pred.label = Label::Low;
        pred.score = 1.0 - p_high;
        pred.tie = p_high == 0.5;
    }
    return pred;
}

void NaiveBayesModel::params_to_json(nlohmann::json& out) const {
    out["parameters"] = {
        {"priors", priors},
        {"means", means},
        {"variances", variances},
    };
}

} // namespace emosig::classify
