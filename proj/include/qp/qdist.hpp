#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "qp/pmf.hpp"
#include "qp/qkernel.hpp"

// The three q-deformed distributions driving all randomness in this library:
// q-geometric, q-Hahn and q-hypergeometric.

namespace qp {

// ---------------------------------------------------------------- q-geometric

/// f(k) = alpha^k (alpha;q)_inf / (k)_q, k = 0, 1, 2, ...
inline double qgeom_pmf(double alpha, const QParams& qp, long long k) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("qgeom_pmf: alpha must be in (0,1)");
    if (k < 0) return 0.0;
    return std::pow(alpha, static_cast<double>(k)) * q_pochhammer_inf(alpha, qp.q, qp.inf_tol) /
           q_int(k, qp.q);
}

/// Truncated pmf table: extended until cumulative mass >= 1 - mass_tol.
/// Residual mass is assigned on draw to the next support point (see
/// inverse_cdf_draw), with the event recorded in tail_event_counter().
inline DiscretePmf qgeom_table(double alpha, const QParams& qp, double mass_tol = 1e-14) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("qgeom_table: alpha must be in (0,1)");
    DiscretePmf pmf;
    pmf.offset = 0;
    const double c = q_pochhammer_inf(alpha, qp.q, qp.inf_tol);
    double cum = 0.0, ak = 1.0, qk = 1.0;  // ak = alpha^k, qk = (k)_q
    for (long long k = 0; cum < 1.0 - mass_tol; ++k) {
        if (k > 0) {
            ak *= alpha;
            qk *= 1.0 - q_power(qp.q, k);
        }
        const double p = ak * c / qk;
        pmf.probs.push_back(p);
        cum += p;
    }
    return pmf;
}

inline long long qgeom_sample(double alpha, const QParams& qp, RngStream& rng) {
    return inverse_cdf_draw(qgeom_table(alpha, qp), rng.next_double());
}

/// Caches the truncated table for repeated draws with fixed parameters.
class QGeomSampler {
  public:
    QGeomSampler(double alpha, const QParams& qp) : table_(qgeom_table(alpha, qp)) {}
    long long draw(RngStream& rng) const { return inverse_cdf_draw(table_, rng.next_double()); }
    long long draw(ChoiceProvider& cp) const { return cp.choose(table_); }
    const DiscretePmf& table() const { return table_; }

  private:
    DiscretePmf table_;
};

// --------------------------------------------------------------------- q-Hahn

/// phi_{base,xi,eta}(k|n) = xi^k (eta/xi;base)_k (xi;base)_{n-k} / (eta;base)_n
///                          * binom(n,k)_base.
/// `base` is explicit because the qRSK instantiates it at q^{-1} > 1; every
/// product here is finite so any positive base is fine.
inline double qhahn_pmf(double xi, double eta, long long n, double base, long long k) {
    if (k < 0 || k > n) return 0.0;
    const double den = q_pochhammer(eta, base, n);
    if (den == 0.0) throw DomainError("qhahn_pmf: (eta;q)_n = 0");
    return std::pow(xi, static_cast<double>(k)) * q_pochhammer(eta / xi, base, k) *
           q_pochhammer(xi, base, n - k) / den * q_binomial(n, k, base);
}

// ----------------------------------------------------------- q-hypergeometric

/// Support of qHyp(m1, m2, k): max(0, k - m2) <= l <= min(m1, k).
inline long long qhyp_support_min(long long m1, ExtInt m2, long long k) {
    (void)m1;
    if (m2.is_inf()) return 0;
    return std::max<long long>(0, k - m2.value());
}
inline long long qhyp_support_max(long long m1, ExtInt m2, long long k) {
    (void)m2;
    return std::min(m1, k);
}

/// pmf of qHyp(m1, m2, k) at l. m2 = INF selects the simplified form that is
/// symmetric in m1 and k. Exact point mass at m1 /\ k when q = 0.
inline double qhyp_pmf(long long m1, ExtInt m2, long long k, const QParams& qp, long long l) {
    if (m1 < 0 || k < 0) throw DomainError("qhyp_pmf: m1 and k must be >= 0");
    if (!m2.is_inf() && m1 + m2.value() < k) throw DomainError("qhyp_pmf: m1 + m2 < k");
    if (l < qhyp_support_min(m1, m2, k) || l > qhyp_support_max(m1, m2, k)) return 0.0;
    const double q = qp.q;
    const double w = q_power(q, (m1 - l) * (k - l));
    if (m2.is_inf()) {
        return w * q_int(m1, q) * q_int(k, q) /
               (q_int(l, q) * q_int(m1 - l, q) * q_int(k - l, q));
    }
    return w * q_binomial(m1, l, q) * q_binomial(m2.value(), k - l, q) /
           q_binomial(m1 + m2.value(), k, q);
}

/// Full finite pmf table (exact; no truncation needed).
inline DiscretePmf qhyp_table(long long m1, ExtInt m2, long long k, const QParams& qp) {
    DiscretePmf pmf;
    pmf.offset = qhyp_support_min(m1, m2, k);
    const long long hi = qhyp_support_max(m1, m2, k);
    for (long long l = pmf.offset; l <= hi; ++l) pmf.probs.push_back(qhyp_pmf(m1, m2, k, qp, l));
    return pmf;
}

inline long long qhyp_sample(long long m1, ExtInt m2, long long k, const QParams& qp,
                             RngStream& rng) {
    const DiscretePmf t = qhyp_table(m1, m2, k, qp);
    // Finite support summing to 1; clamp the (measure-zero) residual branch.
    const long long v = inverse_cdf_draw(t, rng.next_double());
    return std::min(v, t.support_max());
}

// -------------------------------------------------- identities linking the two

/// If X ~ phi_{q^{-1}, q^a, q^b}(.|c) then c - X ~ qHyp(c, b-c, a).
/// Returns the max absolute pointwise deviation between the two pmfs.
inline double check_qhahn_to_qhyp(long long a, long long b, long long c, const QParams& qp) {
    if (!(0 <= a && a <= b && c <= b)) throw DomainError("check_qhahn_to_qhyp: need 0<=a<=b>=c");
    if (qp.q <= 0.0) throw DomainError("check_qhahn_to_qhyp: requires q > 0");
    const double base = 1.0 / qp.q;
    const double xi = q_power(qp.q, a), eta = q_power(qp.q, b);
    double dev = 0.0;
    for (long long s = 0; s <= c; ++s) {
        const double lhs = qhahn_pmf(xi, eta, c, base, s);
        const double rhs = qhyp_pmf(c, ExtInt(b - c), a, qp, c - s);
        dev = std::max(dev, std::abs(lhs - rhs));
    }
    return dev;
}

struct QhypIdentityDeviations {
    double qhyp_finite;    // normalisation identity, finite m2
    double qhyp_infinite;  // same with m2 = infinity
    double vandermonde;    // q-Vandermonde
};

/// Relative |LHS - RHS| / RHS of the three summation identities behind the
/// q-hypergeometric normalisation. (Both sides grow without bound as q -> 1,
/// so the absolute difference is not a meaningful accuracy measure.)
inline QhypIdentityDeviations check_qhyp_identities(long long m1, long long m2, long long k,
                                                    const QParams& qp) {
    const double q = qp.q;
    QhypIdentityDeviations d{};
    {
        double lhs = 0.0;
        const long long lo = std::max<long long>(0, k - m2), hi = std::min(m1, k);
        for (long long s = lo; s <= hi; ++s)
            lhs += q_power(q, (m1 - s) * (k - s)) /
                   (q_int(m1 - s, q) * q_int(k - s, q) * q_int(s, q) * q_int(m2 - k + s, q));
        const double rhs = q_int(m1 + m2, q) /
                           (q_int(m1, q) * q_int(m2, q) * q_int(k, q) * q_int(m1 + m2 - k, q));
        d.qhyp_finite = std::abs(lhs - rhs) / rhs;
    }
    {
        double lhs = 0.0;
        for (long long s = 0; s <= std::min(m1, k); ++s)
            lhs += q_power(q, (m1 - s) * (k - s)) /
                   (q_int(m1 - s, q) * q_int(k - s, q) * q_int(s, q));
        const double rhs = 1.0 / (q_int(m1, q) * q_int(k, q));
        d.qhyp_infinite = std::abs(lhs - rhs) / rhs;
    }
    {
        double lhs = 0.0;
        const long long lo = std::max<long long>(0, k - m2), hi = std::min(m1, k);
        for (long long l = lo; l <= hi; ++l)
            lhs += q_power(q, (m1 - l) * (k - l)) * q_binomial(m1, l, q) *
                   q_binomial(m2, k - l, q);
        const double rhs = q_binomial(m1 + m2, k, q);
        d.vandermonde = std::abs(lhs - rhs) / rhs;
    }
    return d;
}

}  // namespace qp
