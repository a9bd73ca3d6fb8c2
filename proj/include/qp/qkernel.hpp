#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

// q-arithmetic primitives: q-Pochhammers, q-binomials and the q-exponential
// rate function. Everything downstream (distributions, measures, the qRSK
// dynamics) is built on these.

namespace qp {

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Deformation parameter q in [0,1) plus numerical knobs for the infinite
/// products and series.
struct QParams {
    double q = 0.0;
    double inf_tol = 1e-15;  // relative truncation tolerance
    bool log_space = false;  // accumulate long pmf products in log domain

    QParams() = default;
    explicit QParams(double q_, double inf_tol_ = 1e-15, bool log_space_ = false)
        : q(q_), inf_tol(inf_tol_), log_space(log_space_) {
        if (!(q >= 0.0 && q < 1.0)) throw DomainError("QParams: q must be in [0,1)");
        if (!(inf_tol > 0.0 && inf_tol < 1e-6)) throw DomainError("QParams: inf_tol out of range");
    }
};

/// Nonnegative integer extended with a distinguished infinity. Used for the
/// lambda_0 = infinity convention and for infinite edge labels.
class ExtInt {
  public:
    ExtInt() : v_(0) {}
    ExtInt(long long v) : v_(v) {}  // NOLINT: implicit by design
    static ExtInt inf() {
        ExtInt e;
        e.v_ = kInf;
        return e;
    }
    bool is_inf() const { return v_ == kInf; }
    long long value() const {
        if (is_inf()) throw DomainError("ExtInt: value() on infinity");
        return v_;
    }
    friend bool operator==(ExtInt a, ExtInt b) { return a.v_ == b.v_; }
    friend bool operator!=(ExtInt a, ExtInt b) { return a.v_ != b.v_; }
    friend bool operator<(ExtInt a, ExtInt b) {
        if (a.is_inf()) return false;
        if (b.is_inf()) return true;
        return a.v_ < b.v_;
    }
    friend bool operator<=(ExtInt a, ExtInt b) { return a == b || a < b; }
    friend bool operator>(ExtInt a, ExtInt b) { return b < a; }
    friend bool operator>=(ExtInt a, ExtInt b) { return b <= a; }
    std::string str() const { return is_inf() ? "inf" : std::to_string(v_); }

  private:
    static constexpr long long kInf = std::numeric_limits<long long>::max();
    long long v_;
};

/// (a; q)_k for finite integer k (positive, zero or negative), valid for any
/// base q > 0 (the q-Hahn pmf is instantiated at base q^{-1} > 1).
inline double q_pochhammer(double a, double base, long long k) {
    if (k == 0) return 1.0;
    if (k > 0) {
        double prod = 1.0, p = 1.0;
        for (long long i = 0; i < k; ++i) {
            prod *= 1.0 - a * p;
            p *= base;
        }
        return prod;
    }
    // k < 0: prod_{i=1..-k} (1 - a q^{-i})^{-1}
    double prod = 1.0, p = 1.0;
    for (long long i = 1; i <= -k; ++i) {
        p /= base;
        const double f = 1.0 - a * p;
        if (f == 0.0) throw DomainError("q_pochhammer: pole in negative-k product");
        prod /= f;
    }
    return prod;
}

/// (a; q)_infinity, truncated once the running factor deviation |a q^i| drops
/// below tol. The neglected tail multiplies the result by a factor within
/// relative error tol/(1-q).
inline double q_pochhammer_inf(double a, double q, double tol = 1e-15) {
    if (!(std::abs(a) < 1.0)) throw DomainError("q_pochhammer_inf: |a| must be < 1");
    double prod = 1.0, t = a;
    while (std::abs(t) >= tol) {
        prod *= 1.0 - t;
        t *= q;
    }
    return prod;
}

/// q-Pochhammer with ExtInt k: finite k routed to the finite product, INF to
/// the truncated infinite product.
inline double q_pochhammer(double a, const QParams& qp, ExtInt k) {
    if (k.is_inf()) return q_pochhammer_inf(a, qp.q, qp.inf_tol);
    return q_pochhammer(a, qp.q, k.value());
}

/// (k)_q = (q; q)_k for k >= 0.
inline double q_int(long long k, double q) {
    if (k < 0) throw DomainError("q_int: k must be >= 0");
    double prod = 1.0, p = q;
    for (long long i = 1; i <= k; ++i) {
        prod *= 1.0 - p;
        p *= q;
    }
    return prod;
}

/// Gaussian binomial coefficient; 0 outside 0 <= k <= n. Works for any
/// positive base (finite products only).
inline double q_binomial(long long n, long long k, double base) {
    if (k < 0 || k > n) return 0.0;
    if (k == 0 || k == n) return 1.0;
    // (n)_q / ((k)_q (n-k)_q) computed as a product of ratios to stay finite
    // at base > 1: prod_{i=1..k} (1 - base^{n-k+i}) / (1 - base^i).
    double prod = 1.0;
    for (long long i = 1; i <= k; ++i) {
        const double num = 1.0 - std::pow(base, static_cast<double>(n - k + i));
        const double den = 1.0 - std::pow(base, static_cast<double>(i));
        prod *= num / den;
    }
    return prod;
}

/// Integer power of q with the 0^0 = 1 convention, so q = 0 specialisations
/// are exact.
inline double q_power(double q, long long e) {
    if (e == 0) return 1.0;
    if (q == 0.0) return 0.0;
    return std::pow(q, static_cast<double>(e));
}

/// gamma(x) = x (log E_q)'(x) = sum_{i>=0} x q^i / (1 - x q^i), the drift of
/// the q-geometric mean. At q = 0 this is x/(1-x).
inline double gamma_rate(double x, double q, double tol = 1e-15) {
    if (!(x > 0.0 && x < 1.0)) throw DomainError("gamma_rate: x must be in (0,1)");
    double sum = 0.0, t = x;
    while (t >= tol) {
        sum += t / (1.0 - t);
        t *= q;
        if (q == 0.0) break;
    }
    return sum;
}

}  // namespace qp
