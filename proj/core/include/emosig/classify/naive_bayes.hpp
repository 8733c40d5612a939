#pragma once

#include <array>
#include <vector>

#include "emosig/classify/classifier.hpp"

namespace emosig::classify {

/// Gaussian Naive Bayes: class priors plus a per-class, per-feature normal
/// with variance floored at NbParams::variance_floor.
class NaiveBayesModel final : public Model {
public:
    NaiveBayesModel(ClassifierSpec spec, Target target, features::SensorMask mask)
        : Model(spec, target, mask) {}

    std::array<double, 2> priors{};                // [Low, High], sum to 1
    std::array<std::vector<double>, 2> means;      // per class
    std::array<std::vector<double>, 2> variances;  // floored

protected:
    Prediction do_predict(std::span<const double> features) const override;
    void params_to_json(nlohmann::json& out) const override;
};

std::unique_ptr<Model> train_naive_bayes(const ClassifierSpec& spec,
                                         const features::Dataset& dataset, Target target);

} // namespace emosig::classify
