#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace rugbypi {

enum class WilcoxonMode { exact, normal_approx, auto_select };
enum class WilcoxonMethod { exact, normal_approx };

struct WilcoxonResult {
    double w_statistic = 0;   // rank sum over positive differences
    size_t n_effective = 0;   // pairs left after dropping zero differences
    std::optional<double> z;  // only set for the normal approximation
    double p_two_sided = 1;
    WilcoxonMethod method = WilcoxonMethod::normal_approx;
    bool tie_corrected = false;
    bool continuity_corrected = false;
};

// Paired signed-rank test. Zero differences are dropped, |differences| get
// average ranks. Exact mode requires no ties among nonzero |differences|;
// auto picks exact when n_effective < 50 and there are no ties, otherwise
// the tie-corrected normal approximation (continuity per flag).
// Throws LengthMismatch, EmptySample, AllZeroDifferences, ExactWithTies.
WilcoxonResult wilcoxon_signed_rank(const std::vector<double>& x,
                                    const std::vector<double>& y,
                                    WilcoxonMode mode = WilcoxonMode::auto_select,
                                    bool continuity = true);

// Exact two-sided p for the signed-rank statistic via dynamic programming
// over rank subset sums: 2*min(P(W<=w), P(W>=w)) capped at 1.
// Throws OutOfRange unless 1 <= n <= 1023 and 0 <= w <= n(n+1)/2.
double exact_signed_rank_p(double w, unsigned n);

} // namespace rugbypi
