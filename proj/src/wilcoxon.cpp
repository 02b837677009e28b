#include "rugbypi/wilcoxon.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "rugbypi/error.hpp"
#include "rugbypi/numeric.hpp"

namespace rugbypi {

double exact_signed_rank_p(double w, unsigned n) {
    if (n < 1 || n > 1023)
        throw Error(ErrorCode::OutOfRange, "exact test supports 1 <= n <= 1023");
    const long long max_sum = (long long)n * (n + 1) / 2;
    if (w < -1e-9 || w > double(max_sum) + 1e-9)
        throw Error(ErrorCode::OutOfRange, "w outside [0, n(n+1)/2]");

    // Null distribution of W by dynamic programming in probability space:
    // each rank joins the positive set with probability 1/2 independently.
    // All masses are dyadic rationals, so for moderate n the sums below are
    // exact in double arithmetic.
    std::vector<double> prob(size_t(max_sum) + 1, 0.0);
    prob[0] = 1.0;
    for (unsigned k = 1; k <= n; ++k) {
        for (long long s = (long long)k * (k + 1) / 2; s >= (long long)k; --s)
            prob[s] = 0.5 * prob[s] + 0.5 * prob[s - k];
        for (long long s = k - 1; s >= 0; --s) prob[s] *= 0.5;
    }

    const long long w_lo = (long long)std::floor(w + 1e-9); // for P(W <= w)
    const long long w_hi = (long long)std::ceil(w - 1e-9);  // for P(W >= w)
    double p_le = 0.0, p_ge = 0.0;
    for (long long s = 0; s <= std::min(w_lo, max_sum); ++s) p_le += prob[s];
    for (long long s = std::max(w_hi, 0LL); s <= max_sum; ++s) p_ge += prob[s];
    return std::min(1.0, 2.0 * std::min(p_le, p_ge));
}

WilcoxonResult wilcoxon_signed_rank(const std::vector<double>& x,
                                    const std::vector<double>& y,
                                    WilcoxonMode mode,
                                    bool continuity) {
    if (x.size() != y.size())
        throw Error(ErrorCode::LengthMismatch, "paired vectors differ in length");
    if (x.empty()) throw Error(ErrorCode::EmptySample, "no pairs");

    bool zeros_dropped = false;
    std::vector<double> diffs;
    diffs.reserve(x.size());
    for (size_t i = 0; i < x.size(); ++i) {
        const double d = x[i] - y[i];
        if (d == 0.0)
            zeros_dropped = true;
        else
            diffs.push_back(d);
    }
    if (diffs.empty())
        throw Error(ErrorCode::AllZeroDifferences, "every paired difference is zero");

    const size_t n = diffs.size();
    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return std::fabs(diffs[a]) < std::fabs(diffs[b]);
    });

    // average ranks over tie groups; collect tie sizes for the variance
    std::vector<double> ranks(n);
    std::vector<size_t> tie_sizes;
    bool ties = false;
    for (size_t i = 0; i < n;) {
        size_t j = i;
        while (j < n && std::fabs(diffs[order[j]]) == std::fabs(diffs[order[i]])) ++j;
        const double avg_rank = 0.5 * double(i + 1 + j); // mean of ranks i+1..j
        for (size_t k = i; k < j; ++k) ranks[order[k]] = avg_rank;
        tie_sizes.push_back(j - i);
        if (j - i > 1) ties = true;
        i = j;
    }

    double w = 0.0;
    for (size_t i = 0; i < n; ++i)
        if (diffs[i] > 0.0) w += ranks[i];

    WilcoxonResult res;
    res.w_statistic = w;
    res.n_effective = n;

    bool use_exact;
    switch (mode) {
    case WilcoxonMode::exact:
        if (ties)
            throw Error(ErrorCode::ExactWithTies,
                        "tied |differences| preclude the exact distribution");
        use_exact = true;
        break;
    case WilcoxonMode::normal_approx:
        use_exact = false;
        break;
    case WilcoxonMode::auto_select:
    default:
        use_exact = n < 50 && !ties && !zeros_dropped;
        break;
    }

    if (use_exact) {
        res.method = WilcoxonMethod::exact;
        res.p_two_sided = exact_signed_rank_p(w, unsigned(n));
        return res;
    }

    const double dn = double(n);
    const double mu = dn * (dn + 1.0) / 4.0;
    double var = dn * (dn + 1.0) * (2.0 * dn + 1.0) / 24.0;
    for (size_t t : tie_sizes) {
        const double td = double(t);
        var -= (td * td * td - td) / 48.0;
    }
    const double sigma = std::sqrt(var);

    double numer = w - mu;
    if (continuity) {
        if (numer > 0.0) numer -= 0.5;
        else if (numer < 0.0) numer += 0.5;
    }
    const double z = numer / sigma;

    res.method = WilcoxonMethod::normal_approx;
    res.z = z;
    res.tie_corrected = ties;
    res.continuity_corrected = continuity;
    res.p_two_sided = std::min(1.0, 2.0 * (1.0 - normal_cdf(std::fabs(z))));
    return res;
}

} // namespace rugbypi
