#include "rugbypi/stats.hpp"

#include <algorithm>
#include <cmath>

#include "rugbypi/error.hpp"

namespace rugbypi {

DescriptiveStats descriptive(const std::vector<double>& values) {
    if (values.empty()) throw Error(ErrorCode::EmptySample, "descriptive needs n >= 1");
    std::vector<double> sorted = values;
    std::sort(sorted.begin(), sorted.end());

    DescriptiveStats s;
    s.n = sorted.size();
    s.min = sorted.front();
    s.max = sorted.back();
    double sum = 0;
    for (double v : sorted) sum += v;
    s.mean = sum / double(s.n);
    s.median = s.n % 2 == 1 ? sorted[s.n / 2]
                            : 0.5 * (sorted[s.n / 2 - 1] + sorted[s.n / 2]);
    if (s.n >= 2) {
        double ss = 0;
        for (double v : sorted) ss += (v - s.mean) * (v - s.mean);
        s.stddev = std::sqrt(ss / double(s.n - 1));
    }
    return s;
}

double cohens_d_paired(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size())
        throw Error(ErrorCode::LengthMismatch, "paired vectors differ in length");
    if (x.size() < 2) throw Error(ErrorCode::EmptySample, "cohens_d_paired needs n >= 2");
    std::vector<double> diffs(x.size());
    for (size_t i = 0; i < x.size(); ++i) diffs[i] = x[i] - y[i];
    const auto d = descriptive(diffs);
    if (!d.stddev || *d.stddev == 0.0)
        throw Error(ErrorCode::DegenerateSample, "zero variance of differences");
    return d.mean / *d.stddev;
}

std::string significance_stars(double p) {
    if (p <= 0.01) return "***";
    if (p <= 0.05) return "**";
    if (p <= 0.10) return "*";
    return "";
}

std::string effect_label(double r) {
    if (r >= 2.0) return "huge";
    if (r >= 1.2) return "very large";
    if (r >= 0.8) return "large";
    if (r >= 0.5) return "medium";
    if (r >= 0.2) return "small";
    if (r >= 0.01) return "very small";
    return "negligible";
}

EffectSize effect_size_r(double z, size_t n_pairs) {
    if (n_pairs == 0) throw Error(ErrorCode::EmptySample, "effect_size_r needs n_pairs >= 1");
    EffectSize e;
    e.r = std::fabs(z) / std::sqrt(double(n_pairs));
    e.label = effect_label(e.r);
    return e;
}

} // namespace rugbypi
