#include "emosig/classify/tree.hpp"

#include <algorithm>
#include <cmath>

#include <nlohmann/json.hpp>

#include "emosig/errors.hpp"

namespace emosig::classify {

namespace {

double log_factorial(size_t n) {
    static const std::vector<double> table = [] {
        std::vector<double> t(8192, 0.0);
        for (size_t i = 2; i < t.size(); ++i) {
            t[i] = t[i - 1] + std::log(static_cast<double>(i));
        }
        return t;
    }();
    if (n < table.size()) return table[n];
    return std::lgamma(static_cast<double>(n) + 1.0);
}

// P(X <= e | n, p) for X ~ Binomial(n, p), summed in log space.
double binomial_cdf(size_t e, size_t n, double p) {
    if (p <= 0.0) return 1.0;
    if (p >= 1.0) return e >= n ? 1.0 : 0.0;
    const double log_p = std::log(p);
    const double log_q = std::log1p(-p);
    double max_lt = -1e300;
    std::vector<double> lts(e + 1);
    for (size_t k = 0; k <= e; ++k) {
        const double lt = log_factorial(n) - log_factorial(k) - log_factorial(n - k) +
                          static_cast<double>(k) * log_p +
                          static_cast<double>(n - k) * log_q;
        lts[k] = lt;
        max_lt = std::max(max_lt, lt);
    }
    double sum = 0.0;
    for (double lt : lts) sum += std::exp(lt - max_lt);
    return std::min(1.0, std::exp(max_lt) * sum);
}

double entropy_bits(double a, double b) {
    const double n = a + b;
    if (n <= 0.0) return 0.0;
    double h = 0.0;
    for (double c : {a, b}) {
        if (c > 0.0) h -= (c / n) * std::log2(c / n);
    }
    return h;
}

struct Candidate {
    int feature = -1;
    double threshold = 0.0;
    double gain = 0.0;
    double gain_ratio = 0.0;
};

class Builder {
public:
    Builder(const features::Dataset& dataset, Target target, const TreeParams& params)
        : dataset_(dataset), params_(params), dim_(dataset.mask.dimension()) {
        labels_.reserve(dataset.instances.size());
        for (const features::LabeledInstance& inst : dataset.instances) {
            labels_.push_back(target_label(inst, target) == Label::High ? 1 : 0);
        }
    }

    std::vector<TreeModel::Node> run() {
        std::vector<size_t> idx(dataset_.instances.size());
        for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        build(std::move(idx));
        if (params_.pruning) prune(0);
        return compact();
    }

private:
    int build(std::vector<size_t> idx) {
        const int node_id = static_cast<int>(nodes_.size());
        nodes_.emplace_back();
        std::array<double, 2> counts{};
        for (size_t i : idx) counts[static_cast<size_t>(labels_[i])] += 1.0;
        nodes_[node_id].counts = counts;

        const bool pure = counts[0] == 0.0 || counts[1] == 0.0;
        if (pure || idx.size() < 2 * static_cast<size_t>(params_.min_leaf)) {
            return node_id;
        }

        const Candidate best = best_split(idx, counts);
        if (best.feature < 0) return node_id;

        std::vector<size_t> left, right;
        for (size_t i : idx) {
            if (dataset_.instances[i].features[static_cast<size_t>(best.feature)] <=
                best.threshold) {
                left.push_back(i);
            } else {
                right.push_back(i);
            }
        }
        idx.clear();
        idx.shrink_to_fit();

        nodes_[node_id].feature = best.feature;
        nodes_[node_id].threshold = best.threshold;
        const int l = build(std::move(left));
        nodes_[node_id].left = l;
        const int r = build(std::move(right));
        nodes_[node_id].right = r;
        return node_id;
    }

    Candidate best_split(const std::vector<size_t>& idx, const std::array<double, 2>& counts) {
        const double n = static_cast<double>(idx.size());
        const double node_entropy = entropy_bits(counts[0], counts[1]);
        const size_t min_leaf = static_cast<size_t>(params_.min_leaf);

        std::vector<Candidate> candidates;
        std::vector<std::pair<double, int>> column(idx.size());
        for (size_t f = 0; f < dim_; ++f) {
            for (size_t i = 0; i < idx.size(); ++i) {
                column[i] = {dataset_.instances[idx[i]].features[f], labels_[idx[i]]};
            }
            std::sort(column.begin(), column.end());

            std::array<double, 2> left{};
            for (size_t i = 1; i < column.size(); ++i) {
                left[static_cast<size_t>(column[i - 1].second)] += 1.0;
                if (column[i].first <= column[i - 1].first) continue; // not a value boundary
                if (i < min_leaf || column.size() - i < min_leaf) continue;

                const double nl = static_cast<double>(i);
                const double nr = n - nl;
                const double gain =
                    node_entropy - (nl / n) * entropy_bits(left[0], left[1]) -
                    (nr / n) * entropy_bits(counts[0] - left[0], counts[1] - left[1]);
                const double split_info =
                    -(nl / n) * std::log2(nl / n) - (nr / n) * std::log2(nr / n);
                double threshold = 0.5 * (column[i - 1].first + column[i].first);
                if (!(threshold < column[i].first)) threshold = column[i - 1].first;

                Candidate c;
                c.feature = static_cast<int>(f);
                c.threshold = threshold;
                c.gain = gain;
                c.gain_ratio = split_info > 0.0 ? gain / split_info : 0.0;
                candidates.push_back(c);
            }
        }
        if (candidates.empty()) return {};

        double mean_gain = 0.0;
        for (const Candidate& c : candidates) mean_gain += c.gain;
        mean_gain /= static_cast<double>(candidates.size());

        // max gain ratio among splits with at least average gain; candidate
        // order (feature asc, threshold asc) settles ties deterministically
        Candidate best;
        for (const Candidate& c : candidates) {
            if (c.gain + 1e-12 < mean_gain) continue;
            if (c.gain_ratio > best.gain_ratio + 1e-12) best = c;
        }
        if (best.feature < 0 || best.gain <= 1e-12) return {};
        return best;
    }

    // Returns the subtree's estimated error count; collapses nodes whose
    // collapsed estimate does not exceed it.
    double prune(int node_id) {
        TreeModel::Node& node = nodes_[static_cast<size_t>(node_id)];
        const double n = node.counts[0] + node.counts[1];
        const double e = n - std::max(node.counts[0], node.counts[1]);
        const double as_leaf = n * pessimistic_error_rate(e, n, params_.confidence);
        if (node.feature < 0) return as_leaf;

        const double subtree = prune(node.left) + prune(node.right);
        if (as_leaf <= subtree + 1e-9) {
            node.feature = -1;
            node.left = node.right = -1;
            return as_leaf;
        }
        return subtree;
    }

    // Drops nodes orphaned by pruning; preorder layout, root at 0.
    std::vector<TreeModel::Node> compact() const {
        std::vector<TreeModel::Node> out;
        copy_subtree(0, out);
        return out;
    }

    int copy_subtree(int node_id, std::vector<TreeModel::Node>& out) const {
        const int new_id = static_cast<int>(out.size());
        out.push_back(nodes_[static_cast<size_t>(node_id)]);
        if (nodes_[static_cast<size_t>(node_id)].feature >= 0) {
            const int l = copy_subtree(nodes_[static_cast<size_t>(node_id)].left, out);
            out[static_cast<size_t>(new_id)].left = l;
            const int r = copy_subtree(nodes_[static_cast<size_t>(node_id)].right, out);
            out[static_cast<size_t>(new_id)].right = r;
        }
        return new_id;
    }

    const features::Dataset& dataset_;
    TreeParams params_;
    size_t dim_;
    std::vector<int> labels_;
    std::vector<TreeModel::Node> nodes_;
};

} // namespace

double pessimistic_error_rate(double errors, double n, double confidence) {
    if (n <= 0.0) return 1.0;
    const auto e = static_cast<size_t>(errors + 0.5);
    const auto total = static_cast<size_t>(n + 0.5);
    if (e >= total) return 1.0;

    double lo = static_cast<double>(e) / static_cast<double>(total);
    double hi = 1.0;
    if (binomial_cdf(e, total, lo) <= confidence) return lo;
    for (int it = 0; it < 64; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (binomial_cdf(e, total, mid) > confidence) lo = mid;
        else hi = mid;
    }
    return 0.5 * (lo + hi);
}

std::unique_ptr<Model> train_tree(const ClassifierSpec& spec,
                                  const features::Dataset& dataset, Target target) {
    auto model = std::make_unique<TreeModel>(spec, target, dataset.mask);
    Builder builder(dataset, target, spec.tree);
    model->nodes = builder.run();
    return model;
}

size_t TreeModel::leaf_index(std::span<const double> features) const {
    size_t at = 0;
    while (nodes[at].feature >= 0) {
        const TreeModel::Node& node = nodes[at];
        at = static_cast<size_t>(
            features[static_cast<size_t>(node.feature)] <= node.threshold ? node.left
                                                                          : node.right);
    }
    return at;
}

Prediction TreeModel::do_predict(std::span<const double> features) const {
    const Node& leaf = nodes[leaf_index(features)];
    const double n = leaf.counts[0] + leaf.counts[1];
    Prediction pred;
    if (leaf.counts[1] > leaf.counts[0]) {
        pred.label = Label::High;
        pred.score = n > 0.0 ? leaf.counts[1] / n : 1.0;
    } else {
        pred.label = Label::Low;
        pred.score = n > 0.0 ? leaf.counts[0] / n : 1.0;
        pred.tie = leaf.counts[0] == leaf.counts[1];
        if (pred.tie) pred.score = 0.5;
    }
    return pred;
}

void TreeModel::params_to_json(nlohmann::json& out) const {
    nlohmann::json list = nlohmann::json::array();
    for (const Node& n : nodes) {
        list.push_back({{"feature", n.feature},
                        {"threshold", n.threshold},
                        {"left", n.left},
                        {"right", n.right},
                        {"counts", n.counts}});
    }
    out["parameters"] = {{"nodes", list}};
}

} // namespace emosig::classify
