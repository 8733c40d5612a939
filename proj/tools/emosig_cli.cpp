// emosig: synthesize sessions, extract feature vectors, and evaluate the
// sensor-combination grid from the command line.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "emosig/config.hpp"
#include "emosig/errors.hpp"
#include "emosig/eval/comparison.hpp"
#include "emosig/pipeline.hpp"
#include "emosig/synth/generate.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct CommonFlags {
    std::string config_path;
    std::optional<uint64_t> seed;
    int threads = -1; // -1 = take from config
    bool timestamps = false;
};

emosig::PipelineConfig resolve_config(const CommonFlags& flags) {
    emosig::PipelineConfig cfg;
    if (!flags.config_path.empty()) cfg = emosig::load_config(flags.config_path);
    if (flags.seed) cfg.modulation.seed = *flags.seed;
    if (flags.threads >= 0) cfg.threads = flags.threads;
    cfg.validate();
    return cfg;
}

std::string now_iso8601() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof buf, "%FT%TZ", std::gmtime(&t));
    return buf;
}

int cmd_synth(const CommonFlags& flags, const std::string& out_dir, int subjects_flag,
              const std::optional<double>& gsr_gain, const std::optional<double>& emg_gain,
              const std::optional<double>& alpha_gain, const std::optional<double>& noise) {
    emosig::PipelineConfig cfg = resolve_config(flags);
    if (subjects_flag > 0) cfg.synth_subjects = subjects_flag;
    if (gsr_gain) cfg.modulation.arousal_gsr_gain = *gsr_gain;
    if (emg_gain) cfg.modulation.arousal_emg_gain = *emg_gain;
    if (alpha_gain) cfg.modulation.valence_alpha_gain = *alpha_gain;
    if (noise) cfg.modulation.noise_level = *noise;
    cfg.validate();

    const emosig::ProtocolTimeline timeline = emosig::default_timeline();
    const emosig::VideoLabelTable& table = emosig::default_video_table();
    fs::create_directories(out_dir);
    for (int s = 1; s <= cfg.synth_subjects; ++s) {
        char name[16];
        std::snprintf(name, sizeof name, "s%02d", s);
        const auto traces =
            emosig::synth::generate_session(name, timeline, table, cfg.modulation);
        const fs::path manifest = emosig::synth::write_session(out_dir, name, traces, timeline);
        std::cout << manifest.string() << "\n";
    }
    return 0;
}

int cmd_extract(const CommonFlags& flags, const std::vector<std::string>& manifest_paths,
                const std::string& out_csv) {
    const emosig::PipelineConfig cfg = resolve_config(flags);

    std::vector<emosig::SessionManifest> manifests;
    for (const std::string& path : manifest_paths) {
        manifests.push_back(emosig::load_manifest(path));
    }
    const emosig::features::Dataset dataset = emosig::extract_dataset(
        manifests, cfg.dsp, emosig::default_video_table(), cfg.threads);
    emosig::features::write_dataset_csv(fs::path(out_csv), dataset);
    std::cout << out_csv << ": " << dataset.instances.size() << " instances, "
              << dataset.mask.dimension() << " features\n";
    return 0;
}

emosig::eval::LooOptions loo_options(const emosig::PipelineConfig& cfg) {
    emosig::eval::LooOptions opt;
    opt.mode = cfg.loo_mode;
    opt.threads = cfg.threads;
    return opt;
}

int cmd_evaluate(const CommonFlags& flags, const std::string& features_csv,
                 const std::string& out_dir, const std::string& loo_flag,
                 const std::string& mask_flag, const std::string& clf_flag,
                 const std::string& target_flag) {
    emosig::PipelineConfig cfg = resolve_config(flags);
    if (!loo_flag.empty()) {
        cfg.loo_mode = loo_flag == "subject" ? emosig::eval::LooMode::Subject
                                             : emosig::eval::LooMode::Instance;
    }
    const emosig::features::Dataset dataset =
        emosig::features::read_dataset_csv(fs::path(features_csv));

    const bool filtered = !mask_flag.empty() || !clf_flag.empty() || !target_flag.empty();
    if (filtered) {
        // single-cell (or sliced) run: evaluate just the selected settings
        std::vector<emosig::features::SensorMask> masks;
        if (!mask_flag.empty()) masks.push_back(emosig::features::SensorMask::parse(mask_flag));
        else masks.assign(emosig::features::all_masks().begin(),
                          emosig::features::all_masks().end());
        std::vector<emosig::classify::Algorithm> algos;
        if (!clf_flag.empty()) algos.push_back(emosig::classify::algorithm_from_string(clf_flag));
        else algos = {emosig::classify::Algorithm::NaiveBayes,
                      emosig::classify::Algorithm::Tree, emosig::classify::Algorithm::Svm};
        std::vector<emosig::classify::Target> targets;
        if (!target_flag.empty()) targets.push_back(emosig::classify::target_from_string(target_flag));
        else targets = {emosig::classify::Target::Arousal, emosig::classify::Target::Valence};

        for (const auto target : targets) {
            for (const auto& mask : masks) {
                const auto projected = emosig::features::project_sensors(dataset, mask);
                for (const auto algo : algos) {
                    emosig::classify::ClassifierSpec spec = cfg.classifiers;
                    spec.algorithm = algo;
                    const auto report =
                        emosig::eval::loo_evaluate(spec, projected, target, loo_options(cfg));
                    char line[160];
                    std::snprintf(line, sizeof line,
                                  "%-8s %-13s %-5s P=%.3f R=%.3f F1=%.3f acc=%.3f\n",
                                  std::string(to_string(target)).c_str(),
                                  mask.to_string().c_str(),
                                  std::string(to_string(algo)).c_str(),
                                  report.macro.precision, report.macro.recall,
                                  report.macro.f1, report.accuracy);
                    std::cout << line;
                }
            }
        }
        return 0;
    }

    const emosig::eval::ComparisonGrid grid =
        emosig::eval::run_comparison(cfg.classifiers, dataset, loo_options(cfg));
    emosig::eval::print_grid(std::cout, grid);

    fs::create_directories(out_dir);
    json report = emosig::eval::grid_to_json(grid);
    report["config"] = emosig::config_to_json(cfg);
    if (flags.timestamps) report["generated_at"] = now_iso8601();
    {
        std::ofstream out(fs::path(out_dir) / "report.json");
        if (!out) throw emosig::Error("cannot write report.json");
        out << report.dump(2) << "\n";
    }
    emosig::eval::write_grid_csv(fs::path(out_dir) / "report.csv", grid);
    std::cout << "reports written to " << out_dir << "\n";
    return 0;
}

int cmd_compare(const CommonFlags& flags, const std::string& features_csv,
                const std::string& target_flag, const std::string& mask_a,
                const std::string& clf_a, const std::string& mask_b,
                const std::string& clf_b) {
    const emosig::PipelineConfig cfg = resolve_config(flags);
    const emosig::features::Dataset dataset =
        emosig::features::read_dataset_csv(fs::path(features_csv));
    const auto target = emosig::classify::target_from_string(target_flag);

    auto evaluate = [&](const std::string& mask_text, const std::string& clf_text) {
        const auto mask = emosig::features::SensorMask::parse(mask_text);
        emosig::classify::ClassifierSpec spec = cfg.classifiers;
        spec.algorithm = emosig::classify::algorithm_from_string(clf_text);
        const auto projected = emosig::features::project_sensors(dataset, mask);
        return emosig::eval::loo_evaluate(spec, projected, target, loo_options(cfg));
    };
    const auto report_a = evaluate(mask_a, clf_a);
    const auto report_b = evaluate(mask_b, clf_b);
    const auto result =
        emosig::eval::mcnemar_test(report_a.predictions, report_b.predictions);

    char line[256];
    std::snprintf(line, sizeof line,
                  "A: %s/%s F1=%.3f\nB: %s/%s F1=%.3f\n"
                  "McNemar: b=%zu c=%zu statistic=%.4f p=%.6g (%s)\n",
                  mask_a.c_str(), clf_a.c_str(), report_a.macro.f1, mask_b.c_str(),
                  clf_b.c_str(), report_b.macro.f1, result.b, result.c, result.statistic,
                  result.p_value,
                  result.method == emosig::eval::McNemarMethod::ExactBinomial
                      ? "exact_binomial"
                      : "chi_square_cc");
    std::cout << line;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"EEG/GSR/EMG emotion recognition pipeline"};
    app.require_subcommand(1);

    CommonFlags flags;
    app.add_option("--config", flags.config_path, "JSON config file; flags win over it");
    app.add_option("--seed", flags.seed, "generator seed");
    app.add_option("--threads", flags.threads, "worker threads (0 = all cores)");
    app.add_flag("--timestamps", flags.timestamps, "include wall-clock timestamps in reports");

    // synth
    auto* synth = app.add_subcommand("synth", "generate synthetic sessions");
    std::string synth_out = "sessions";
    int synth_subjects = 0;
    std::optional<double> gsr_gain, emg_gain, alpha_gain, noise;
    synth->add_option("--out", synth_out, "output directory");
    synth->add_option("--subjects", synth_subjects, "number of subjects");
    synth->add_option("--gsr-gain", gsr_gain, "extra SCR pulses/min in High-arousal videos");
    synth->add_option("--emg-gain", emg_gain, "EMG burst gain in High-arousal videos");
    synth->add_option("--alpha-gain", alpha_gain, "alpha power gain in High-valence videos");
    synth->add_option("--noise", noise, "sensor noise level");

    // extract
    auto* extract = app.add_subcommand("extract", "extract feature vectors from sessions");
    std::vector<std::string> manifest_paths;
    std::string extract_out = "features.csv";
    extract->add_option("manifests", manifest_paths, "manifest JSON files")->required();
    extract->add_option("--out", extract_out, "output feature CSV");

    // evaluate
    auto* evaluate = app.add_subcommand("evaluate", "run the sensor-combination grid");
    std::string features_csv, eval_out = "reports", loo_flag, mask_flag, clf_flag, target_flag;
    evaluate->add_option("features", features_csv, "feature CSV")->required();
    evaluate->add_option("--out", eval_out, "report output directory");
    evaluate->add_option("--loo", loo_flag, "instance|subject")
        ->check(CLI::IsMember({"instance", "subject"}));
    evaluate->add_option("--mask", mask_flag, "EEG|GSR|EMG or + combinations");
    evaluate->add_option("--clf", clf_flag, "nb|tree|svm")
        ->check(CLI::IsMember({"nb", "tree", "svm"}));
    evaluate->add_option("--target", target_flag, "valence|arousal")
        ->check(CLI::IsMember({"valence", "arousal"}));

    // compare
    auto* compare = app.add_subcommand("compare", "McNemar test between two settings");
    std::string cmp_csv, cmp_target = "arousal";
    std::string cmp_mask_a = "GSR", cmp_clf_a = "tree", cmp_mask_b = "EEG", cmp_clf_b = "svm";
    compare->add_option("features", cmp_csv, "feature CSV")->required();
    compare->add_option("--target", cmp_target, "valence|arousal")
        ->check(CLI::IsMember({"valence", "arousal"}));
    compare->add_option("--a-mask", cmp_mask_a, "first setting mask");
    compare->add_option("--a-clf", cmp_clf_a, "first setting classifier");
    compare->add_option("--b-mask", cmp_mask_b, "second setting mask");
    compare->add_option("--b-clf", cmp_clf_b, "second setting classifier");

    CLI11_PARSE(app, argc, argv);

    try {
        if (synth->parsed()) {
            return cmd_synth(flags, synth_out, synth_subjects, gsr_gain, emg_gain,
                             alpha_gain, noise);
        }
        if (extract->parsed()) return cmd_extract(flags, manifest_paths, extract_out);
        if (evaluate->parsed()) {
            return cmd_evaluate(flags, features_csv, eval_out, loo_flag, mask_flag,
                                clf_flag, target_flag);
        }
        if (compare->parsed()) {
            return cmd_compare(flags, cmp_csv, cmp_target, cmp_mask_a, cmp_clf_a,
                               cmp_mask_b, cmp_clf_b);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
