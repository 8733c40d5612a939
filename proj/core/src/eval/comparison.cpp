#include "emosig/eval/comparison.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>

#include <nlohmann/json.hpp>

#include "emosig/errors.hpp"

namespace emosig::eval {

using classify::Algorithm;
using classify::Target;

const std::vector<PaperReference>& paper_references() {
    static const std::vector<PaperReference> refs = {
        {"EEG", Target::Arousal, "SVM", 0.605, 0.605, 0.605},
        {"GSR", Target::Arousal, "J48", 0.671, 0.645, 0.630},
        {"EMG", Target::Arousal, "NB", 0.315, 0.316, 0.315},
        {"EEG+GSR", Target::Arousal, "SVM", 0.639, 0.638, 0.638},
        {"GSR+EMG", Target::Arousal, "J48", 0.653, 0.618, 0.596},
        {"EEG+EMG", Target::Arousal, "SVM/J48", 0.619, 0.618, 0.618},
        {"EEG+GSR+EMG", Target::Arousal, "SVM", 0.606, 0.605, 0.605},
        {"EEG", Target::Valence, "SVM", 0.567, 0.566, 0.563},
        {"GSR", Target::Valence, "NB", 0.585, 0.507, 0.359},
        {"EMG", Target::Valence, "J48", 0.748, 0.599, 0.527},
        {"EEG+GSR", Target::Valence, "SVM", 0.553, 0.553, 0.551},
        {"GSR+EMG", Target::Valence, "J48", 0.540, 0.539, 0.539},
        {"EEG+EMG", Target::Valence, "SVM", 0.559, 0.559, 0.559},
        {"EEG+GSR+EMG", Target::Valence, "SVM", 0.586, 0.586, 0.585},
    };
    return refs;
}

namespace {

bool classifier_tag_matches(const std::string& tag, Algorithm algorithm) {
    switch (algorithm) {
        case Algorithm::Svm:        return tag == "SVM" || tag == "SVM/J48";
        case Algorithm::Tree:       return tag == "J48" || tag == "SVM/J48";
        case Algorithm::NaiveBayes: return tag == "NB";
    }
    return false;
}

} // namespace

std::optional<double> reference_f1(const features::SensorMask& mask, Algorithm algorithm,
                                   Target target) {
    const std::string mask_name = mask.to_string();
    for (const PaperReference& ref : paper_references()) {
        if (ref.mask == mask_name && ref.target == target &&
            classifier_tag_matches(ref.classifier, algorithm)) {
            return ref.f1;
        }
    }
    return std::nullopt;
}

ComparisonGrid run_comparison(const classify::ClassifierSpec& base_spec,
                              const features::Dataset& dataset, const LooOptions& options) {
    if (!dataset.mask.eeg || !dataset.mask.gsr || !dataset.mask.emg) {
        throw EmptyMask("the comparison grid needs all three sensor blocks");
    }

    static constexpr Algorithm kAlgorithms[] = {Algorithm::NaiveBayes, Algorithm::Tree,
                                                Algorithm::Svm};
    static constexpr Target kTargets[] = {Target::Arousal, Target::Valence};

    ComparisonGrid grid;
    for (const Target target : kTargets) {
        const size_t first_cell = grid.cells.size();
        for (const features::SensorMask& mask : features::all_masks()) {
            const features::Dataset projected = features::project_sensors(dataset, mask);
            for (const Algorithm algorithm : kAlgorithms) {
                classify::ClassifierSpec spec = base_spec;
                spec.algorithm = algorithm;
                GridCell cell;
                cell.mask = mask;
                cell.algorithm = algorithm;
                cell.target = target;
                cell.report = loo_evaluate(spec, projected, target, options);
                cell.reference = reference_f1(mask, algorithm, target);
                grid.cells.push_back(std::move(cell));
            }
        }
        // best F1 for this target; first cell in canonical order wins ties
        size_t best = first_cell;
        for (size_t i = first_cell; i < grid.cells.size(); ++i) {
            if (grid.cells[i].report.macro.f1 > grid.cells[best].report.macro.f1) best = i;
        }
        grid.cells[best].best = true;
        for (size_t i = first_cell; i < grid.cells.size(); ++i) {
            if (i == best) continue;
            grid.cells[i].vs_best = mcnemar_test(grid.cells[best].report.predictions,
                                                 grid.cells[i].report.predictions);
        }
    }
    return grid;
}

namespace {

const char* method_name(McNemarMethod m) {
    switch (m) {
        case McNemarMethod::ChiSquareCC:   return "chi_square_cc";
        case McNemarMethod::ExactBinomial: return "exact_binomial";
        case McNemarMethod::Auto:          return "auto";
    }
    return "?";
}

nlohmann::json cell_to_json(const GridCell& cell) {
    nlohmann::json j = {
        {"target", std::string(to_string(cell.target))},
        {"mask", cell.mask.to_string()},
        {"classifier", std::string(to_string(cell.algorithm))},
        {"precision", cell.report.macro.precision},
        {"recall", cell.report.macro.recall},
        {"f1", cell.report.macro.f1},
        {"accuracy", cell.report.accuracy},
        {"confusion", cell.report.confusion},
        {"best", cell.best},
    };
    j["reference_f1"] = cell.reference ? nlohmann::json(*cell.reference) : nlohmann::json();
    if (cell.vs_best) {
        j["mcnemar_vs_best"] = {
            {"b", cell.vs_best->b},
            {"c", cell.vs_best->c},
            {"statistic", cell.vs_best->statistic},
            {"p_value", cell.vs_best->p_value},
            {"method", method_name(cell.vs_best->method)},
        };
    } else {
        j["mcnemar_vs_best"] = nlohmann::json();
    }
    return j;
}

} // namespace

nlohmann::json grid_to_json(const ComparisonGrid& grid) {
    nlohmann::json cells = nlohmann::json::array();
    for (const GridCell& cell : grid.cells) cells.push_back(cell_to_json(cell));

    nlohmann::json refs = nlohmann::json::array();
    for (const PaperReference& ref : paper_references()) {
        refs.push_back({{"mask", ref.mask},
                        {"target", std::string(to_string(ref.target))},
                        {"classifier", ref.classifier},
                        {"precision", ref.precision},
                        {"recall", ref.recall},
                        {"f1", ref.f1}});
    }
    return nlohmann::json{{"grid", cells}, {"paper_reference", refs}};
}

void write_grid_json(std::ostream& out, const ComparisonGrid& grid) {
    out << grid_to_json(grid).dump(2) << "\n";
}

void write_grid_json(const std::filesystem::path& path, const ComparisonGrid& grid) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write report: " + path.string());
    write_grid_json(out, grid);
}

void write_grid_csv(std::ostream& out, const ComparisonGrid& grid) {
    out << "target,mask,classifier,precision,recall,f1,reference_f1,best,"
           "mcnemar_p_vs_best\n";
    char buf[64];
    for (const GridCell& cell : grid.cells) {
        out << to_string(cell.target) << "," << cell.mask.to_string() << ","
            << to_string(cell.algorithm) << ",";
        std::snprintf(buf, sizeof buf, "%.6f,%.6f,%.6f,", cell.report.macro.precision,
                      cell.report.macro.recall, cell.report.macro.f1);
        out << buf;
        if (cell.reference) {
            std::snprintf(buf, sizeof buf, "%.3f", *cell.reference);
            out << buf;
        }
        out << "," << (cell.best ? "1" : "0") << ",";
        if (cell.vs_best) {
            std::snprintf(buf, sizeof buf, "%.6g", cell.vs_best->p_value);
            out << buf;
        }
        out << "\n";
    }
}

void write_grid_csv(const std::filesystem::path& path, const ComparisonGrid& grid) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write report: " + path.string());
    write_grid_csv(out, grid);
}

void print_grid(std::ostream& out, const ComparisonGrid& grid) {
    out << "target   mask          clf   precision recall  f1      ref_f1  best  p_vs_best\n";
    char line[160];
    for (const GridCell& cell : grid.cells) {
        char ref[16] = "     -";
        if (cell.reference) std::snprintf(ref, sizeof ref, "%6.3f", *cell.reference);
        char pval[16] = "        -";
        if (cell.vs_best) std::snprintf(pval, sizeof pval, "%9.4g", cell.vs_best->p_value);
        std::snprintf(line, sizeof line, "%-8s %-13s %-5s %9.3f %6.3f %7.3f %7s %5s %s\n",
                      std::string(to_string(cell.target)).c_str(),
                      cell.mask.to_string().c_str(),
                      std::string(to_string(cell.algorithm)).c_str(),
                      cell.report.macro.precision, cell.report.macro.recall,
                      cell.report.macro.f1, ref, cell.best ? "*" : "", pval);
        out << line;
    }
}

} // namespace emosig::eval
