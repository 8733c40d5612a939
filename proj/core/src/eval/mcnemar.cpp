#include "emosig/eval/mcnemar.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "emosig/errors.hpp"

namespace emosig::eval {

double chi_square_1df_upper_tail(double statistic) {
    if (statistic <= 0.0) return 1.0;
    return std::erfc(std::sqrt(statistic / 2.0));
}

namespace {

// two-sided exact binomial test against p = 0.5
double exact_binomial_p(size_t b, size_t c) {
    const size_t n = b + c;
    if (n == 0) return 1.0;
    const size_t k = std::min(b, c);
    // P(X <= k) for X ~ Binomial(n, 1/2), doubled and capped
    double log_coeff = -static_cast<double>(n) * std::log(2.0); // C(n,0) * 2^-n
    double tail = std::exp(log_coeff);
    for (size_t i = 1; i <= k; ++i) {
        log_coeff += std::log(static_cast<double>(n - i + 1) / static_cast<double>(i));
        tail += std::exp(log_coeff);
    }
    return std::min(1.0, 2.0 * tail);
}

} // namespace

McNemarResult mcnemar_from_counts(size_t b, size_t c, McNemarMethod method) {
    McNemarResult result;
    result.b = b;
    result.c = c;

    const size_t discordant = b + c;
    const double diff =
        std::abs(static_cast<double>(b) - static_cast<double>(c));
    const double corrected = std::max(diff - 1.0, 0.0);
    result.statistic = discordant > 0
                           ? corrected * corrected / static_cast<double>(discordant)
                           : 0.0;

    McNemarMethod branch = method;
    if (branch == McNemarMethod::Auto) {
        branch = (discordant > 0 && discordant < 25) ? McNemarMethod::ExactBinomial
                                                     : McNemarMethod::ChiSquareCC;
    }
    result.method = branch;
    if (discordant == 0) {
        result.statistic = 0.0;
        result.p_value = 1.0;
        return result;
    }
    result.p_value = branch == McNemarMethod::ExactBinomial
                         ? exact_binomial_p(b, c)
                         : chi_square_1df_upper_tail(result.statistic);
    return result;
}

McNemarResult mcnemar_test(const FoldPredictions& preds_a, const FoldPredictions& preds_b,
                           McNemarMethod method) {
    if (preds_a.items.size() != preds_b.items.size()) {
        throw InstanceMismatch("prediction sets differ in size");
    }
    std::map<std::string, const FoldPrediction*> by_id;
    for (const FoldPrediction& p : preds_b.items) {
        if (!by_id.emplace(p.instance_id, &p).second) {
            throw InstanceMismatch("duplicate instance id " + p.instance_id);
        }
    }

    size_t b = 0, c = 0;
    for (const FoldPrediction& pa : preds_a.items) {
        auto it = by_id.find(pa.instance_id);
        if (it == by_id.end()) {
            throw InstanceMismatch("instance " + pa.instance_id + " missing from second set");
        }
        const FoldPrediction& pb = *it->second;
        if (pa.gold != pb.gold) {
            throw InstanceMismatch("gold label mismatch on instance " + pa.instance_id);
        }
        const bool a_correct = pa.predicted == pa.gold;
        const bool b_correct = pb.predicted == pb.gold;
        if (a_correct && !b_correct) ++b;
        if (!a_correct && b_correct) ++c;
    }
    return mcnemar_from_counts(b, c, method);
}

} // namespace emosig::eval
