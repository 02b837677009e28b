#pragma once

#include <string>

namespace rugbypi {

// Standard normal CDF, accurate over the full double range.
double normal_cdf(double z);

// Inverse of the standard normal CDF (Wichura's PPND16 algorithm),
// |error| < 1e-15 for p in (0,1).
double normal_quantile(double p);

// log2 of the binomial coefficient C(n, k), via lgamma. Exact enough for
// description-length arithmetic (n in the thousands).
double log2_binomial(long long n, long long k);

// Format a double the way rule text wants it: up to six decimals with
// trailing zeros (and a dangling point) removed, so 343 -> "343",
// 0.9330 -> "0.933", 0.074534 -> "0.074534".
std::string format_trimmed(double value);

// Fixed-precision helper: "%.*f".
std::string format_fixed(double value, int decimals);

} // namespace rugbypi
