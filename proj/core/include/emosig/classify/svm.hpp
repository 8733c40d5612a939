#pragma once

#include <vector>

#include "emosig/classify/classifier.hpp"

namespace emosig::classify {

/// SVM with polynomial kernel (x.z + 1)^e trained by sequential minimal
/// optimization. Features are normalized to [0,1] with training min/max;
/// test values are clipped to [-0.05, 1.05] before kernel evaluation.
class SvmModel final : public Model {
public:
    struct SupportVector {
        std::vector<double> x; // normalized
        double alpha = 0.0;    // 0 < alpha <= C
        int y = 0;             // -1 = Low, +1 = High
    };

    SvmModel(ClassifierSpec spec, Target target, features::SensorMask mask)
        : Model(spec, target, mask) {}

    std::vector<SupportVector> support_vectors;
    double bias = 0.0;
    std::vector<double> feature_min;   // from training data only
    std::vector<double> feature_scale; // 1/(max-min), 0 for constant features

    /// Raw decision value for unnormalized input features.
    double decision_value(std::span<const double> features) const;

protected:
    Prediction do_predict(std::span<const double> features) const override;
    void params_to_json(nlohmann::json& out) const override;
};

std::unique_ptr<Model> train_svm(const ClassifierSpec& spec,
                                 const features::Dataset& dataset, Target target);

} // namespace emosig::classify
