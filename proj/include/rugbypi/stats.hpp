#pragma once

#include <optional>
#include <string>
#include <vector>

namespace rugbypi {

struct DescriptiveStats {
    size_t n = 0;
    double mean = 0;
    double median = 0;
    double min = 0;
    double max = 0;
    std::optional<double> stddev; // sample (n-1); undefined for n=1
};

// Throws EmptySample for an empty vector.
DescriptiveStats descriptive(const std::vector<double>& values);

// mean(x-y) / sample sd(x-y). Throws LengthMismatch, EmptySample (n<2),
// DegenerateSample (zero sd of differences).
double cohens_d_paired(const std::vector<double>& x, const std::vector<double>& y);

// "***" at p<=0.01, "**" at p<=0.05, "*" at p<=0.10, else "".
std::string significance_stars(double p);

struct EffectSize {
    double r = 0; // |z| / sqrt(n_pairs)
    std::string label;
};

// Sawilowsky thresholds: 0.01 very small, 0.2 small, 0.5 medium, 0.8 large,
// 1.2 very large, 2.0 huge; below 0.01 "negligible".
std::string effect_label(double r);

EffectSize effect_size_r(double z, size_t n_pairs);

} // namespace rugbypi
