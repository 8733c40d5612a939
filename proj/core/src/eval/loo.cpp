#include "emosig/eval/loo.hpp"

#include <algorithm>

#include "emosig/classify/svm.hpp"
#include "emosig/errors.hpp"
#include "emosig/util/parallel.hpp"

namespace emosig::eval {

EvaluationReport loo_evaluate(const classify::ClassifierSpec& spec,
                              const features::Dataset& dataset, classify::Target target,
                              const LooOptions& options, LooAudit* audit) {
    const size_t n = dataset.instances.size();
    if (n < 2) throw EmptyDataset("leave-one-out needs at least two instances");

    // fold -> held-out instance indices
    std::vector<std::vector<size_t>> folds;
    if (options.mode == LooMode::Instance) {
        folds.resize(n);
        for (size_t i = 0; i < n; ++i) folds[i] = {i};
    } else {
        std::vector<std::string> subjects;
        for (const features::LabeledInstance& inst : dataset.instances) {
            if (std::find(subjects.begin(), subjects.end(), inst.subject_id) ==
                subjects.end()) {
                subjects.push_back(inst.subject_id);
            }
        }
        folds.resize(subjects.size());
        for (size_t i = 0; i < n; ++i) {
            const auto it = std::find(subjects.begin(), subjects.end(),
                                      dataset.instances[i].subject_id);
            folds[static_cast<size_t>(it - subjects.begin())].push_back(i);
        }
        if (folds.size() < 2) {
            throw EmptyDataset("leave-one-subject-out needs at least two subjects");
        }
    }

    std::vector<FoldPrediction> slots(n);
    if (audit) audit->folds.assign(folds.size(), {});

    util::parallel_for(folds.size(), options.threads, [&](size_t fold_id) {
        const std::vector<size_t>& held_out = folds[fold_id];

        features::Dataset training;
        training.mask = dataset.mask;
        training.instances.reserve(n - held_out.size());
        size_t cursor = 0;
        for (size_t i = 0; i < n; ++i) {
            if (cursor < held_out.size() && held_out[cursor] == i) {
                ++cursor;
                continue;
            }
            training.instances.push_back(dataset.instances[i]);
        }

        const std::unique_ptr<classify::Model> model =
            classify::train(spec, training, target);

        for (const size_t i : held_out) {
            const features::LabeledInstance& inst = dataset.instances[i];
            const classify::Prediction pred = model->predict(inst.features);
            slots[i] = FoldPrediction{inst.id(), classify::target_label(inst, target),
                                      pred.label, pred.score};
        }

        if (audit) {
            LooAudit::Fold& f = audit->folds[fold_id];
            for (const size_t i : held_out) f.test_ids.push_back(dataset.instances[i].id());
            for (const features::LabeledInstance& inst : training.instances) {
                f.training_ids.push_back(inst.id());
            }
            if (const auto* svm = dynamic_cast<const classify::SvmModel*>(model.get())) {
                f.feature_min = svm->feature_min;
                f.feature_scale = svm->feature_scale;
            }
        }
    });

    FoldPredictions predictions;
    predictions.items = std::move(slots);
    return macro_metrics(predictions);
}

} // namespace emosig::eval
