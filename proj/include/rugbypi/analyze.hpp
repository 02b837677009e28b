#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rugbypi/stats.hpp"
#include "rugbypi/wilcoxon.hpp"

namespace rugbypi {

struct AnalyzeOptions {
    WilcoxonMode mode = WilcoxonMode::auto_select;
    bool continuity = true;
};

// One report row for one indicator. Pairs with an undefined value on either
// side are dropped before testing; n_pairs == 0 marks an all-undefined
// indicator (rendered as a dash row). p/r stay unset when the test is
// degenerate (all differences zero).
struct PiTestRow {
    std::string name;
    size_t n_pairs = 0;
    std::optional<DescriptiveStats> winner;
    std::optional<DescriptiveStats> loser;
    std::optional<double> p;
    std::string stars;
    std::optional<EffectSize> effect;
    char median_sign = '='; // '+', '-' or '='
};

// Composes descriptive stats, the signed-rank test, effect size r, stars and
// the median sign for one indicator's paired winner/loser values. The effect
// size always comes from the tie-corrected normal deviate (so it is defined
// even when the p-value used the exact path).
PiTestRow analyze_indicator(const std::string& name,
                            const std::vector<std::optional<double>>& winner_values,
                            const std::vector<std::optional<double>>& loser_values,
                            const AnalyzeOptions& options = {});

} // namespace rugbypi
