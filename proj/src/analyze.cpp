#include "rugbypi/analyze.hpp"

#include "rugbypi/error.hpp"

namespace rugbypi {

PiTestRow analyze_indicator(const std::string& name,
                            const std::vector<std::optional<double>>& winner_values,
                            const std::vector<std::optional<double>>& loser_values,
                            const AnalyzeOptions& options) {
    if (winner_values.size() != loser_values.size())
        throw Error(ErrorCode::LengthMismatch, "paired vectors differ in length");

    std::vector<double> w, l;
    for (size_t i = 0; i < winner_values.size(); ++i) {
        if (winner_values[i] && loser_values[i]) { // pairwise deletion
            w.push_back(*winner_values[i]);
            l.push_back(*loser_values[i]);
        }
    }

    PiTestRow row;
    row.name = name;
    row.n_pairs = w.size();
    if (w.empty()) return row; // dash row

    row.winner = descriptive(w);
    row.loser = descriptive(l);
    const double median_diff = row.winner->median - row.loser->median;
    row.median_sign = median_diff > 0 ? '+' : median_diff < 0 ? '-' : '=';

    WilcoxonResult test;
    try {
        test = wilcoxon_signed_rank(w, l, options.mode, options.continuity);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::AllZeroDifferences) return row; // p/r stay unset
        throw;
    }
    row.p = test.p_two_sided;
    row.stars = significance_stars(test.p_two_sided);

    // effect size from the normal deviate, even when p came from the exact path
    double z;
    if (test.method == WilcoxonMethod::normal_approx) {
        z = *test.z;
    } else {
        const auto approx =
            wilcoxon_signed_rank(w, l, WilcoxonMode::normal_approx, options.continuity);
        z = *approx.z;
    }
    row.effect = effect_size_r(z, row.n_pairs);
    return row;
}

} // namespace rugbypi
