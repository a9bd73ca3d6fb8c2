#pragma once

#include <cmath>
#include <map>
#include <stdexcept>
#include <vector>

#include "qp/pmf.hpp"

// Chi-square goodness-of-fit against an exact discrete law, with standard
// low-expected-count bin pooling.

namespace qp {

namespace detail {

/// Lower regularized incomplete gamma P(a, x): series for x < a + 1,
/// continued fraction (modified Lentz) otherwise.
inline double gamma_p(double a, double x) {
    if (a <= 0.0 || x < 0.0) throw std::invalid_argument("gamma_p: need a > 0, x >= 0");
    if (x == 0.0) return 0.0;
    const double lg = std::lgamma(a);
    if (x < a + 1.0) {
        double term = 1.0 / a, sum = term, ap = a;
        for (int i = 0; i < 10000; ++i) {
            ap += 1.0;
            term *= x / ap;
            sum += term;
            if (std::abs(term) < std::abs(sum) * 1e-16) break;
        }
        return sum * std::exp(-x + a * std::log(x) - lg);
    }
    const double tiny = 1e-300;
    double b = x + 1.0 - a, c = 1.0 / tiny, d = 1.0 / b, h = d;
    for (int i = 1; i < 10000; ++i) {
        const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < 1e-16) break;
    }
    return 1.0 - std::exp(-x + a * std::log(x) - lg) * h;
}

}  // namespace detail

struct ChiSquareResult {
    double statistic;
    long long dof;
    double p_value;
    long long pooled_bins;
};

/// Pearson chi-square of observed counts against expected probabilities.
/// Bins with expected count < `min_expected` are pooled into one; observed
/// mass outside the expected support joins the pooled bin. dof = bins - 1.
inline ChiSquareResult chi_square_test(const std::map<long long, long long>& observed,
                                       const std::map<long long, double>& expected_probs,
                                       long long n_samples, double min_expected = 5.0) {
    if (n_samples <= 0) throw std::invalid_argument("chi_square_test: need samples");
    double pooled_exp = 0.0;
    long long pooled_obs = 0, pooled_bins = 0, kept = 0;
    double stat = 0.0, covered = 0.0;
    for (const auto& [k, p] : expected_probs) {
        covered += p;
        const double e = p * static_cast<double>(n_samples);
        const auto it = observed.find(k);
        const long long o = it == observed.end() ? 0 : it->second;
        if (e < min_expected) {
            pooled_exp += e;
            pooled_obs += o;
            ++pooled_bins;
        } else {
            const double d = static_cast<double>(o) - e;
            stat += d * d / e;
            ++kept;
        }
    }
    for (const auto& [k, o] : observed)
        if (!expected_probs.count(k)) pooled_obs += o;
    pooled_exp += (1.0 - covered) * static_cast<double>(n_samples);
    if (pooled_exp > 0.0 || pooled_obs > 0) {
        const double e = std::max(pooled_exp, 1e-12);
        const double d = static_cast<double>(pooled_obs) - e;
        stat += d * d / e;
        ++kept;
    }
    const long long dof = std::max<long long>(1, kept - 1);
    const double p = 1.0 - detail::gamma_p(static_cast<double>(dof) / 2.0, stat / 2.0);
    return ChiSquareResult{stat, dof, p, pooled_bins};
}

/// Convenience overload against a DiscretePmf table.
inline ChiSquareResult chi_square_test(const std::map<long long, long long>& observed,
                                       const DiscretePmf& pmf, long long n_samples,
                                       double min_expected = 5.0) {
    std::map<long long, double> probs;
    for (long long k = pmf.support_min(); k <= pmf.support_max(); ++k) {
        const double p = pmf.at(k);
        if (p > 0.0) probs[k] = p;
    }
    return chi_square_test(observed, probs, n_samples, min_expected);
}

inline double sample_mean(const std::vector<double>& xs) {
    double s = 0.0;
    for (double x : xs) s += x;
    return s / static_cast<double>(xs.size());
}

inline double sample_stderr(const std::vector<double>& xs) {
    const double m = sample_mean(xs);
    double s = 0.0;
    for (double x : xs) s += (x - m) * (x - m);
    return std::sqrt(s / (static_cast<double>(xs.size()) * (static_cast<double>(xs.size()) - 1.0)));
}

}  // namespace qp
