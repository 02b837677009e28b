#pragma once

#include <vector>

namespace rugbypi {

struct ShapiroResult {
    double w = 0;
    double p = 0;
};

// Shapiro-Wilk normality test for 3 <= n <= 5000 (Royston's AS R94:
// polynomial coefficient approximation plus a normalizing transformation of
// W for the p-value). Throws SampleTooSmall (n < 3), DegenerateSample
// (zero range), OutOfRange (n > 5000).
ShapiroResult shapiro_wilk(const std::vector<double>& values);

} // namespace rugbypi
