#include "emosig/config.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

#include "emosig/errors.hpp"

namespace emosig {

using nlohmann::json;

void PipelineConfig::validate() const {
    dsp.validate();
    modulation.validate();
    if (synth_subjects < 1) throw OutOfRange("synth subjects must be positive");
    if (classifiers.svm.cost <= 0.0) throw OutOfRange("SVM C must be positive");
    if (classifiers.svm.kernel_exponent <= 0.0) {
        throw OutOfRange("SVM kernel exponent must be positive");
    }
    if (classifiers.svm.tolerance <= 0.0) throw OutOfRange("SVM tolerance must be positive");
    if (classifiers.tree.confidence <= 0.0 || classifiers.tree.confidence >= 1.0) {
        throw OutOfRange("tree confidence must lie in (0, 1)");
    }
    if (classifiers.tree.min_leaf < 1) throw OutOfRange("tree min_leaf must be positive");
    if (classifiers.nb.variance_floor <= 0.0) {
        throw OutOfRange("NB variance floor must be positive");
    }
}

PipelineConfig config_from_json(const json& doc) {
    PipelineConfig cfg;
    try {
        if (doc.contains("dsp")) {
            const json& d = doc.at("dsp");
            if (d.contains("bands")) {
                for (dsp::BandSpec& band : cfg.dsp.bands) {
                    if (!d.at("bands").contains(band.name)) continue;
                    const json& edges = d.at("bands").at(band.name);
                    band.low_hz = edges.at(0).get<double>();
                    band.high_hz = edges.at(1).get<double>();
                }
            }
            if (d.contains("filter_order")) cfg.dsp.filter_order = d.at("filter_order").get<int>();
            if (d.contains("emg_band")) {
                cfg.dsp.emg_band_low_hz = d.at("emg_band").at(0).get<double>();
                cfg.dsp.emg_band_high_hz = d.at("emg_band").at(1).get<double>();
            }
            if (d.contains("tonic_cutoff_hz")) {
                cfg.dsp.tonic_cutoff_hz = d.at("tonic_cutoff_hz").get<double>();
            }
            if (d.contains("wavelet")) {
                const json& w = d.at("wavelet");
                if (w.contains("family")) cfg.dsp.wavelet.family = w.at("family").get<std::string>();
                if (w.contains("levels")) cfg.dsp.wavelet.levels = w.at("levels").get<int>();
                if (w.contains("threshold_scale")) {
                    cfg.dsp.wavelet.threshold_scale = w.at("threshold_scale").get<double>();
                }
            }
            if (d.contains("peak_prominence_factor")) {
                cfg.dsp.peak_prominence_factor = d.at("peak_prominence_factor").get<double>();
            }
            if (d.contains("emg_window_ms")) {
                cfg.dsp.emg_window_ms = d.at("emg_window_ms").get<double>();
            }
        }
        if (doc.contains("classifiers")) {
            const json& c = doc.at("classifiers");
            if (c.contains("svm")) {
                const json& s = c.at("svm");
                if (s.contains("C")) cfg.classifiers.svm.cost = s.at("C").get<double>();
                if (s.contains("kernel_exponent")) {
                    cfg.classifiers.svm.kernel_exponent = s.at("kernel_exponent").get<double>();
                }
                if (s.contains("tolerance")) {
                    cfg.classifiers.svm.tolerance = s.at("tolerance").get<double>();
                }
            }
            if (c.contains("tree")) {
                const json& t = c.at("tree");
                if (t.contains("confidence")) {
                    cfg.classifiers.tree.confidence = t.at("confidence").get<double>();
                }
                if (t.contains("min_leaf")) cfg.classifiers.tree.min_leaf = t.at("min_leaf").get<int>();
                if (t.contains("pruning")) cfg.classifiers.tree.pruning = t.at("pruning").get<bool>();
            }
            if (c.contains("nb") && c.at("nb").contains("variance_floor")) {
                cfg.classifiers.nb.variance_floor = c.at("nb").at("variance_floor").get<double>();
            }
        }
        if (doc.contains("eval")) {
            const json& e = doc.at("eval");
            if (e.contains("loo")) {
                const std::string mode = e.at("loo").get<std::string>();
                if (mode == "instance") cfg.loo_mode = eval::LooMode::Instance;
                else if (mode == "subject") cfg.loo_mode = eval::LooMode::Subject;
                else throw OutOfRange("eval.loo must be 'instance' or 'subject'");
            }
            if (e.contains("threads")) cfg.threads = e.at("threads").get<int>();
        }
        if (doc.contains("synth")) {
            const json& s = doc.at("synth");
            if (s.contains("subjects")) cfg.synth_subjects = s.at("subjects").get<int>();
            if (s.contains("seed")) cfg.modulation.seed = s.at("seed").get<uint64_t>();
            if (s.contains("arousal_gsr_gain")) {
                cfg.modulation.arousal_gsr_gain = s.at("arousal_gsr_gain").get<double>();
            }
            if (s.contains("arousal_emg_gain")) {
                cfg.modulation.arousal_emg_gain = s.at("arousal_emg_gain").get<double>();
            }
            if (s.contains("valence_alpha_gain")) {
                cfg.modulation.valence_alpha_gain = s.at("valence_alpha_gain").get<double>();
            }
            if (s.contains("noise_level")) {
                cfg.modulation.noise_level = s.at("noise_level").get<double>();
            }
        }
    } catch (const json::exception& e) {
        throw OutOfRange(std::string("bad config document: ") + e.what());
    }
    cfg.validate();
    return cfg;
}

json config_to_json(const PipelineConfig& cfg) {
    json bands = json::object();
    for (const dsp::BandSpec& b : cfg.dsp.bands) {
        bands[b.name] = {b.low_hz, b.high_hz};
    }
    return json{
        {"dsp",
         {{"bands", bands},
          {"filter_order", cfg.dsp.filter_order},
          {"emg_band", {cfg.dsp.emg_band_low_hz, cfg.dsp.emg_band_high_hz}},
          {"tonic_cutoff_hz", cfg.dsp.tonic_cutoff_hz},
          {"wavelet",
           {{"family", cfg.dsp.wavelet.family},
            {"levels", cfg.dsp.wavelet.levels},
            {"threshold_scale", cfg.dsp.wavelet.threshold_scale}}},
          {"peak_prominence_factor", cfg.dsp.peak_prominence_factor},
          {"emg_window_ms", cfg.dsp.emg_window_ms}}},
        {"classifiers",
         {{"svm",
           {{"C", cfg.classifiers.svm.cost},
            {"kernel_exponent", cfg.classifiers.svm.kernel_exponent},
            {"tolerance", cfg.classifiers.svm.tolerance}}},
          {"tree",
           {{"confidence", cfg.classifiers.tree.confidence},
            {"min_leaf", cfg.classifiers.tree.min_leaf},
            {"pruning", cfg.classifiers.tree.pruning}}},
          {"nb", {{"variance_floor", cfg.classifiers.nb.variance_floor}}}}},
        {"eval",
         {{"loo", cfg.loo_mode == eval::LooMode::Instance ? "instance" : "subject"},
          {"threads", cfg.threads}}},
        {"synth",
         {{"subjects", cfg.synth_subjects},
          {"seed", cfg.modulation.seed},
          {"arousal_gsr_gain", cfg.modulation.arousal_gsr_gain},
          {"arousal_emg_gain", cfg.modulation.arousal_emg_gain},
          {"valence_alpha_gain", cfg.modulation.valence_alpha_gain},
          {"noise_level", cfg.modulation.noise_level}}},
    };
}

PipelineConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw OutOfRange("cannot open config: " + path.string());
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw OutOfRange(std::string("config is not valid JSON: ") + e.what());
    }
    return config_from_json(doc);
}

} // namespace emosig
