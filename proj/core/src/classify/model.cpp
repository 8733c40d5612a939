#include "emosig/classify/classifier.hpp"

#include <nlohmann/json.hpp>

#include "emosig/classify/naive_bayes.hpp"
#include "emosig/classify/svm.hpp"
#include "emosig/classify/tree.hpp"
#include "emosig/errors.hpp"

namespace emosig::classify {

using nlohmann::json;

std::string_view to_string(Algorithm a) {
    switch (a) {
        case Algorithm::NaiveBayes: return "nb";
        case Algorithm::Tree:       return "tree";
        case Algorithm::Svm:        return "svm";
    }
    return "?";
}

Algorithm algorithm_from_string(std::string_view name) {
    if (name == "nb" || name == "naive_bayes") return Algorithm::NaiveBayes;
    if (name == "tree" || name == "j48") return Algorithm::Tree;
    if (name == "svm" || name == "smo") return Algorithm::Svm;
    throw OutOfRange("unknown classifier: " + std::string(name));
}

std::string_view to_string(Target t) {
    return t == Target::Valence ? "valence" : "arousal";
}

Target target_from_string(std::string_view name) {
    if (name == "valence") return Target::Valence;
    if (name == "arousal") return Target::Arousal;
    throw OutOfRange("unknown target: " + std::string(name));
}

Prediction Model::predict(std::span<const double> features) const {
    if (features.size() != dimension()) {
        throw DimensionMismatch("instance has " + std::to_string(features.size()) +
                                " features, model expects " + std::to_string(dimension()));
    }
    return do_predict(features);
}

std::unique_ptr<Model> train(const ClassifierSpec& spec, const features::Dataset& dataset,
                             Target target) {
    if (dataset.instances.empty()) throw EmptyDataset("cannot train on an empty dataset");
    for (const features::LabeledInstance& inst : dataset.instances) {
        if (inst.features.size() != dataset.mask.dimension()) {
            throw DimensionMismatch("instance " + inst.id() +
                                    " does not match the dataset mask dimension");
        }
        if (target_label(inst, target) == Label::Unassigned) {
            throw EmptyDataset("instance " + inst.id() + " has an unassigned label");
        }
    }
    switch (spec.algorithm) {
        case Algorithm::NaiveBayes: return train_naive_bayes(spec, dataset, target);
        case Algorithm::Tree:       return train_tree(spec, dataset, target);
        case Algorithm::Svm:        return train_svm(spec, dataset, target);
    }
    throw OutOfRange("unknown algorithm");
}

json model_to_json(const Model& model) {
    json hyper;
    const ClassifierSpec& spec = model.spec();
    switch (spec.algorithm) {
        case Algorithm::NaiveBayes:
            hyper = {{"variance_floor", spec.nb.variance_floor}};
            break;
        case Algorithm::Tree:
            hyper = {{"confidence", spec.tree.confidence},
                     {"min_leaf", spec.tree.min_leaf},
                     {"pruning", spec.tree.pruning}};
            break;
        case Algorithm::Svm:
            hyper = {{"C", spec.svm.cost},
                     {"kernel_exponent", spec.svm.kernel_exponent},
                     {"tolerance", spec.svm.tolerance}};
            break;
    }
    json doc = {
        {"algorithm", std::string(to_string(spec.algorithm))},
        {"target", std::string(to_string(model.target()))},
        {"mask", model.mask().to_string()},
        {"hyperparameters", hyper},
    };
    model.params_to_json(doc);
    return doc;
}

std::unique_ptr<Model> model_from_json(const json& doc) {
    ClassifierSpec spec;
    spec.algorithm = algorithm_from_string(doc.at("algorithm").get<std::string>());
    const Target target = target_from_string(doc.at("target").get<std::string>());
    const features::SensorMask mask =
        features::SensorMask::parse(doc.at("mask").get<std::string>());
    const json& hyper = doc.at("hyperparameters");
    const json& params = doc.at("parameters");

    switch (spec.algorithm) {
        case Algorithm::NaiveBayes: {
            spec.nb.variance_floor = hyper.at("variance_floor").get<double>();
            auto model = std::make_unique<NaiveBayesModel>(spec, target, mask);
            model->priors[0] = params.at("priors")[0].get<double>();
            model->priors[1] = params.at("priors")[1].get<double>();
            for (int c = 0; c < 2; ++c) {
                model->means[c] = params.at("means")[c].get<std::vector<double>>();
                model->variances[c] = params.at("variances")[c].get<std::vector<double>>();
            }
            return model;
        }
        case Algorithm::Tree: {
            spec.tree.confidence = hyper.at("confidence").get<double>();
            spec.tree.min_leaf = hyper.at("min_leaf").get<int>();
            spec.tree.pruning = hyper.at("pruning").get<bool>();
            auto model = std::make_unique<TreeModel>(spec, target, mask);
            for (const json& n : params.at("nodes")) {
                TreeModel::Node node;
                node.feature = n.at("feature").get<int>();
                node.threshold = n.at("threshold").get<double>();
                node.left = n.at("left").get<int>();
                node.right = n.at("right").get<int>();
                node.counts[0] = n.at("counts")[0].get<double>();
                node.counts[1] = n.at("counts")[1].get<double>();
                model->nodes.push_back(node);
            }
            return model;
        }
        case Algorithm::Svm: {
            spec.svm.cost = hyper.at("C").get<double>();
            spec.svm.kernel_exponent = hyper.at("kernel_exponent").get<double>();
            spec.svm.tolerance = hyper.at("tolerance").get<double>();
            auto model = std::make_unique<SvmModel>(spec, target, mask);
            model->bias = params.at("bias").get<double>();
            model->feature_min = params.at("normalization").at("min").get<std::vector<double>>();
            model->feature_scale =
                params.at("normalization").at("scale").get<std::vector<double>>();
            for (const json& sv : params.at("support_vectors")) {
                SvmModel::SupportVector v;
                v.alpha = sv.at("alpha").get<double>();
                v.y = sv.at("y").get<int>();
                v.x = sv.at("x").get<std::vector<double>>();
                model->support_vectors.push_back(std::move(v));
            }
            return model;
        }
    }
    throw OutOfRange("unknown algorithm");
}

} // namespace emosig::classify
