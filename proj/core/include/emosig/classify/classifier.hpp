#pragma once

#include <memory>
#include <span>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "emosig/core/types.hpp"
#include "emosig/features/dataset.hpp"

namespace emosig::classify {

enum class Algorithm { NaiveBayes, Tree, Svm };
enum class Target { Valence, Arousal };

std::string_view to_string(Algorithm a);
Algorithm algorithm_from_string(std::string_view name);
std::string_view to_string(Target t);
Target target_from_string(std::string_view name);

struct SvmParams {
    double cost = 1.0;
    double kernel_exponent = 1.0; // K(x,z) = (x.z + 1)^e
    double tolerance = 1e-3;
};

struct TreeParams {
    double confidence = 0.25;
    int min_leaf = 2;
    bool pruning = true;
};

struct NbParams {
    double variance_floor = 1e-9;
};

struct ClassifierSpec {
    Algorithm algorithm = Algorithm::NaiveBayes;
    SvmParams svm;
    TreeParams tree;
    NbParams nb;
};

struct Prediction {
    Label label = Label::Low;
    double score = 0.0;
    bool tie = false; // scores tied; Low predicted by convention
};

/// A trained, immutable classifier. Carries the spec, target, and sensor
/// mask it was trained with.
class Model {
public:
    virtual ~Model() = default;

    /// Throws DimensionMismatch when the feature count disagrees with the
    /// training mask.
    Prediction predict(std::span<const double> features) const;

    const ClassifierSpec& spec() const { return spec_; }
    Target target() const { return target_; }
    const features::SensorMask& mask() const { return mask_; }
    size_t dimension() const { return mask_.dimension(); }

protected:
    Model(ClassifierSpec spec, Target target, features::SensorMask mask)
        : spec_(spec), target_(target), mask_(mask) {}

    virtual Prediction do_predict(std::span<const double> features) const = 0;
    virtual void params_to_json(nlohmann::json& out) const = 0;

private:
    friend nlohmann::json model_to_json(const Model& model);

    ClassifierSpec spec_;
    Target target_;
    features::SensorMask mask_;
};

/// Deterministic for a fixed instance ordering. SVM requires both classes
/// (SingleClass otherwise); NB and the tree degenerate to constant
/// predictors on single-class data.
std::unique_ptr<Model> train(const ClassifierSpec& spec, const features::Dataset& dataset,
                             Target target);

/// Self-describing JSON round-trip of a trained model.
nlohmann::json model_to_json(const Model& model);
std::unique_ptr<Model> model_from_json(const nlohmann::json& doc);

/// Label of an instance under the given target.
inline Label target_label(const features::LabeledInstance& inst, Target target) {
    return target == Target::Valence ? inst.valence : inst.arousal;
}

} // namespace emosig::classify
