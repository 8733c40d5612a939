#include "emosig/classify/svm.hpp"

#include <algorithm>
#include <cmath>

#include <nlohmann/json.hpp>

#include "emosig/errors.hpp"

namespace emosig::classify {

namespace {

double poly_kernel(std::span<const double> a, std::span<const double> b, double exponent) {
    double dot = 0.0;
    for (size_t i = 0; i < a.size(); ++i) dot += a[i] * b[i];
    const double base = dot + 1.0;
    if (exponent == 1.0) return base;
    if (exponent == 2.0) return base * base;
    if (exponent == 3.0) return base * base * base;
    return std::pow(base, exponent);
}

// Platt-style SMO with a full error cache. Iteration order follows the
// dataset order so training is deterministic.
class SmoSolver {
public:
    SmoSolver(const std::vector<std::vector<double>>& x, const std::vector<int>& y,
              const SvmParams& params)
        : x_(x), y_(y), c_(params.cost), tol_(params.tolerance),
          exponent_(params.kernel_exponent), n_(x.size()) {
        alphas_.assign(n_, 0.0);
        errors_.assign(n_, 0.0);
        kernel_.assign(n_ * n_, 0.0);
        for (size_t i = 0; i < n_; ++i) {
            for (size_t j = i; j < n_; ++j) {
                const double k = poly_kernel(x_[i], x_[j], exponent_);
                kernel_[i * n_ + j] = k;
                kernel_[j * n_ + i] = k;
            }
        }
        // f(x) = 0 everywhere at the start
        for (size_t i = 0; i < n_; ++i) errors_[i] = -static_cast<double>(y_[i]);
    }

    void solve() {
        bool examine_all = true;
        size_t changed = 0;
        int guard = 0;
        while ((changed > 0 || examine_all) && guard++ < 10000) {
            changed = 0;
            for (size_t i = 0; i < n_; ++i) {
                if (!examine_all && (alphas_[i] <= 0.0 || alphas_[i] >= c_)) continue;
                changed += examine(i);
            }
            if (examine_all) examine_all = false;
            else if (changed == 0) examine_all = true;
        }
    }

    const std::vector<double>& alphas() const { return alphas_; }
    double bias() const { return bias_; }

private:
    double k(size_t i, size_t j) const { return kernel_[i * n_ + j]; }

    size_t examine(size_t i2) {
        const double y2 = y_[i2];
        const double alph2 = alphas_[i2];
        const double e2 = errors_[i2];
        const double r2 = e2 * y2;
        const bool violates = (r2 < -tol_ && alph2 < c_) || (r2 > tol_ && alph2 > 0.0);
        if (!violates) return 0;

        // second-choice heuristic: largest |E1 - E2| over non-bound alphas
        size_t best = n_;
        double best_gap = -1.0;
        for (size_t i = 0; i < n_; ++i) {
            if (alphas_[i] <= 0.0 || alphas_[i] >= c_) continue;
            const double gap = std::abs(errors_[i] - e2);
            if (gap > best_gap) { best_gap = gap; best = i; }
        }
        if (best < n_ && take_step(best, i2)) return 1;

        for (size_t i = 0; i < n_; ++i) {
            if (alphas_[i] <= 0.0 || alphas_[i] >= c_) continue;
            if (take_step(i, i2)) return 1;
        }
        for (size_t i = 0; i < n_; ++i) {
            if (take_step(i, i2)) return 1;
        }
        return 0;
    }

    bool take_step(size_t i1, size_t i2) {
        if (i1 == i2) return false;
        const double alph1 = alphas_[i1];
        const double alph2 = alphas_[i2];
        const double y1 = y_[i1];
        const double y2 = y_[i2];
        const double e1 = errors_[i1];
        const double e2 = errors_[i2];
        const double s = y1 * y2;

        double lo, hi;
        if (s < 0.0) {
            lo = std::max(0.0, alph2 - alph1);
            hi = std::min(c_, c_ + alph2 - alph1);
        } else {
            lo = std::max(0.0, alph1 + alph2 - c_);
            hi = std::min(c_, alph1 + alph2);
        }
        if (lo >= hi) return false;

        const double k11 = k(i1, i1), k12 = k(i1, i2), k22 = k(i2, i2);
        const double eta = k11 + k22 - 2.0 * k12;
        double a2;
        if (eta > 0.0) {
            a2 = alph2 + y2 * (e1 - e2) / eta;
            a2 = std::clamp(a2, lo, hi);
        } else {
            // objective at both clip bounds (Platt's degenerate-kernel case)
            const double f1 = y1 * (e1 + bias_) - alph1 * k11 - s * alph2 * k12;
            const double f2 = y2 * (e2 + bias_) - s * alph1 * k12 - alph2 * k22;
            const double l1 = alph1 + s * (alph2 - lo);
            const double h1 = alph1 + s * (alph2 - hi);
            const double obj_lo = l1 * f1 + lo * f2 + 0.5 * l1 * l1 * k11 +
                                  0.5 * lo * lo * k22 + s * lo * l1 * k12;
            const double obj_hi = h1 * f1 + hi * f2 + 0.5 * h1 * h1 * k11 +
                                  0.5 * hi * hi * k22 + s * hi * h1 * k12;
            if (obj_lo < obj_hi - 1e-12) a2 = lo;
            else if (obj_lo > obj_hi + 1e-12) a2 = hi;
            else return false;
        }
        if (std::abs(a2 - alph2) < 1e-12 * (a2 + alph2 + 1e-12)) return false;

        double a1 = alph1 + s * (alph2 - a2);
        if (a1 < 0.0) { a2 += s * a1; a1 = 0.0; }
        else if (a1 > c_) { a2 += s * (a1 - c_); a1 = c_; }

        const double d1 = y1 * (a1 - alph1);
        const double d2 = y2 * (a2 - alph2);
        const double b1 = bias_ - e1 - d1 * k11 - d2 * k12;
        const double b2 = bias_ - e2 - d1 * k12 - d2 * k22;
        double new_bias;
        if (a1 > 0.0 && a1 < c_) new_bias = b1;
        else if (a2 > 0.0 && a2 < c_) new_bias = b2;
        else new_bias = 0.5 * (b1 + b2);

        const double db = new_bias - bias_;
        for (size_t i = 0; i < n_; ++i) {
            errors_[i] += d1 * k(i1, i) + d2 * k(i2, i) + db;
        }
        alphas_[i1] = a1;
        alphas_[i2] = a2;
        bias_ = new_bias;
        return true;
    }

    const std::vector<std::vector<double>>& x_;
    const std::vector<int>& y_;
    double c_;
    double tol_;
    double exponent_;
    size_t n_;
    std::vector<double> alphas_;
    std::vector<double> errors_;
    std::vector<double> kernel_;
    double bias_ = 0.0;
};

} // namespace

std::unique_ptr<Model> train_svm(const ClassifierSpec& spec,
                                 const features::Dataset& dataset, Target target) {
    const size_t n = dataset.instances.size();
    const size_t dim = dataset.mask.dimension();

    std::vector<int> y(n);
    bool has_low = false, has_high = false;
    for (size_t i = 0; i < n; ++i) {
        const bool high = target_label(dataset.instances[i], target) == Label::High;
        y[i] = high ? 1 : -1;
        (high ? has_high : has_low) = true;
    }
    if (!has_low || !has_high) {
        throw SingleClass("SVM training requires both classes");
    }

    auto model = std::make_unique<SvmModel>(spec, target, dataset.mask);
    model->feature_min.assign(dim, 0.0);
    model->feature_scale.assign(dim, 0.0);
    for (size_t f = 0; f < dim; ++f) {
        double lo = dataset.instances[0].features[f];
        double hi = lo;
        for (const features::LabeledInstance& inst : dataset.instances) {
            lo = std::min(lo, inst.features[f]);
            hi = std::max(hi, inst.features[f]);
        }
        model->feature_min[f] = lo;
        model->feature_scale[f] = hi > lo ? 1.0 / (hi - lo) : 0.0;
    }

    std::vector<std::vector<double>> x(n, std::vector<double>(dim));
    for (size_t i = 0; i < n; ++i) {
        for (size_t f = 0; f < dim; ++f) {
            x[i][f] = (dataset.instances[i].features[f] - model->feature_min[f]) *
                      model->feature_scale[f];
        }
    }

    SmoSolver solver(x, y, spec.svm);
    solver.solve();

    model->bias = solver.bias();
    for (size_t i = 0; i < n; ++i) {
        if (solver.alphas()[i] != 0.0) {
            model->support_vectors.push_back(
                SvmModel::SupportVector{std::move(x[i]), solver.alphas()[i], y[i]});
        }
    }
    return model;
}

double SvmModel::decision_value(std::span<const double> features) const {
    std::vector<double> z(features.size());
    for (size_t f = 0; f < features.size(); ++f) {
        const double v = (features[f] - feature_min[f]) * feature_scale[f];
        z[f] = std::clamp(v, -0.05, 1.05);
    }
    double value = bias;
    for (const SupportVector& sv : support_vectors) {
        value += sv.alpha * sv.y * poly_kernel(sv.x, z, spec().svm.kernel_exponent);
    }
    return value;
}

Prediction SvmModel::do_predict(std::span<const double> features) const {
    const double value = decision_value(features);
    Prediction pred;
    pred.score = value;
    if (value > 0.0) {
        pred.label = Label::High;
    } else {
        pred.label = Label::Low;
        pred.tie = value == 0.0;
    }
    return pred;
}

void SvmModel::params_to_json(nlohmann::json& out) const {
    nlohmann::json svs = nlohmann::json::array();
    for (const SupportVector& sv : support_vectors) {
        svs.push_back({{"alpha", sv.alpha}, {"y", sv.y}, {"x", sv.x}});
    }
    out["parameters"] = {
        {"bias", bias},
        {"normalization", {{"min", feature_min}, {"scale", feature_scale}}},
        {"support_vectors", svs},
    };
}

} // namespace emosig::classify
