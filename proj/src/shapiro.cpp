#include "rugbypi/shapiro.hpp"

#include <algorithm>
#include <cmath>

#include "rugbypi/error.hpp"
#include "rugbypi/numeric.hpp"

namespace rugbypi {

namespace {

// Horner evaluation, coefficients in ascending-power order
double poly(const double* c, int count, double x) {
    double r = 0.0;
    for (int i = count - 1; i >= 0; --i) r = r * x + c[i];
    return r;
}

} // namespace

// Royston's AS R94 algorithm: Blom-score-based coefficients with polynomial
// corrections, W as a squared correlation, and a normalizing transformation
// of (1 - W) for the p-value.
ShapiroResult shapiro_wilk(const std::vector<double>& values) {
    const size_t n = values.size();
    if (n < 3) throw Error(ErrorCode::SampleTooSmall, "shapiro_wilk needs n >= 3");
    if (n > 5000) throw Error(ErrorCode::OutOfRange, "shapiro_wilk supports n <= 5000");

    std::vector<double> x = values;
    std::sort(x.begin(), x.end());
    const double range = x.back() - x.front();
    const double scale = std::max({std::fabs(x.front()), std::fabs(x.back()), 1.0});
    if (range <= 1e-12 * scale)
        throw Error(ErrorCode::DegenerateSample, "all values equal within tolerance");

    const double an = double(n);
    const size_t nn2 = n / 2;
    std::vector<double> a(nn2 + 1, 0.0); // 1-based like the published routine

    if (n == 3) {
        a[1] = std::sqrt(0.5);
    } else {
        static const double c1[6] = {0.0, 0.221157, -0.147981, -2.071190, 4.434685, -2.706056};
        static const double c2[6] = {0.0, 0.042981, -0.293762, -1.752461, 5.682633, -3.582633};
        const double an25 = an + 0.25;
        double summ2 = 0.0;
        for (size_t i = 1; i <= nn2; ++i) {
            a[i] = normal_quantile((double(i) - 0.375) / an25);
            summ2 += a[i] * a[i];
        }
        summ2 *= 2.0;
        const double ssumm2 = std::sqrt(summ2);
        const double rsn = 1.0 / std::sqrt(an);
        const double a1 = poly(c1, 6, rsn) - a[1] / ssumm2;

        size_t i1;
        double fac;
        if (n > 5) {
            i1 = 3;
            const double a2 = -a[2] / ssumm2 + poly(c2, 6, rsn);
            fac = std::sqrt((summ2 - 2.0 * a[1] * a[1] - 2.0 * a[2] * a[2]) /
                            (1.0 - 2.0 * a1 * a1 - 2.0 * a2 * a2));
            a[2] = a2;
        } else {
            i1 = 2;
            fac = std::sqrt((summ2 - 2.0 * a[1] * a[1]) / (1.0 - 2.0 * a1 * a1));
        }
        a[1] = a1;
        for (size_t i = i1; i <= nn2; ++i) a[i] = -a[i] / fac;
    }

    // coefficient for sorted position i (0-based): antisymmetric tails, zero middle
    auto coef = [&](size_t i) -> double {
        if (i < nn2) return -a[i + 1];
        if (i >= n - nn2) return a[n - i];
        return 0.0;
    };

    double xm = 0.0;
    for (double v : x) xm += v;
    xm /= an;
    double sax = 0.0, ssa = 0.0, ssx = 0.0;
    for (size_t i = 0; i < n; ++i) {
        const double c = coef(i);
        sax += c * (x[i] / range);
        ssa += c * c;
        ssx += (x[i] / range - xm / range) * (x[i] / range - xm / range);
    }
    const double norm = std::sqrt(ssa * ssx);
    double w1 = (norm - sax) * (norm + sax) / (ssa * ssx);
    w1 = std::max(w1, 1e-300); // guard the log below
    const double w = 1.0 - w1;

    ShapiroResult res;
    res.w = w;
    if (n == 3) {
        const double pi6 = 1.90985931710274;  // 6/pi
        const double stqr = 1.04719755119660; // asin(sqrt(3/4))
        double pw = pi6 * (std::asin(std::sqrt(w)) - stqr);
        res.p = std::min(std::max(pw, 0.0), 1.0);
        return res;
    }

    double y = std::log(w1);
    const double xx = std::log(an);
    double m, s;
    if (n <= 11) {
        static const double g[2] = {-2.273, 0.459};
        static const double c3[4] = {0.544, -0.39978, 0.025054, -6.714e-4};
        static const double c4[4] = {1.3822, -0.77857, 0.062767, -0.0020322};
        const double gamma = poly(g, 2, an);
        if (y >= gamma) {
            res.p = 1e-99; // an "obvious" non-normal sample
            return res;
        }
        y = -std::log(gamma - y);
        m = poly(c3, 4, an);
        s = std::exp(poly(c4, 4, an));
    } else {
        static const double c5[4] = {-1.5861, -0.31082, -0.083751, 0.0038915};
        static const double c6[3] = {-0.4803, -0.082676, 0.0030302};
        m = poly(c5, 4, xx);
        s = std::exp(poly(c6, 3, xx));
    }
    res.p = 1.0 - normal_cdf((y - m) / s); // upper tail
    return res;
}

} // namespace rugbypi
