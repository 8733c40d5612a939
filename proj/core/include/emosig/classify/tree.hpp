#pragma once

#include <array>
#include <vector>

#include "emosig/classify/classifier.hpp"

namespace emosig::classify {

/// Binary decision tree grown C4.5-style: numeric splits at midpoints
/// between consecutive observed values, chosen by gain ratio among
/// candidates whose information gain reaches the mean gain, then pruned
/// with the pessimistic (confidence-bound) error estimate.
class TreeModel final : public Model {
public:
    struct Node {
        int feature = -1;          // -1 marks a leaf
        double threshold = 0.0;    // go left when x[feature] <= threshold
        int left = -1;
        int right = -1;
        std::array<double, 2> counts{}; // training instances [Low, High]
    };

    TreeModel(ClassifierSpec spec, Target target, features::SensorMask mask)
        : Model(spec, target, mask) {}

    std::vector<Node> nodes; // nodes[0] is the root
    const Node& root() const { return nodes.front(); }

    /// Index of the leaf an instance is routed to.
    size_t leaf_index(std::span<const double> features) const;

protected:
    Prediction do_predict(std::span<const double> features) const override;
    void params_to_json(nlohmann::json& out) const override;
};

std::unique_ptr<Model> train_tree(const ClassifierSpec& spec,
                                  const features::Dataset& dataset, Target target);

/// Upper confidence bound of a binomial error rate: the p solving
/// P(X <= errors | n, p) = confidence. Exposed for the pruning tests.
double pessimistic_error_rate(double errors, double n, double confidence);

} // namespace emosig::classify
