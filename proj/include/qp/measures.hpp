#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

#include "qp/localmoves.hpp"
#include "qp/polymer.hpp"
#include "qp/qdist.hpp"
#include "qp/tableaux.hpp"

// (t = 0)-Macdonald polynomials, the q-Whittaker measure, and the
// push-forward measure mu_{q,Lambda} of the q-local moves, with truncated-sum
// verifiers for the joint-distribution corollaries.

namespace qp {

/// Environment parameters: w_{ij} ~ qGeom(alpha_hat_i alpha_j).
struct EnvParams {
    std::vector<double> alpha;      // column parameters alpha_j
    std::vector<double> alpha_hat;  // row parameters alpha_hat_i

    void validate() const {
        for (double ah : alpha_hat)
            for (double a : alpha)
                if (!(ah * a > 0.0 && ah * a < 1.0))
                    throw DomainError("EnvParams: alpha_hat_i alpha_j must lie in (0,1)");
    }
    double ahat(long long i) const { return alpha_hat[static_cast<std::size_t>(i - 1)]; }
    double a(long long j) const { return alpha[static_cast<std::size_t>(j - 1)]; }
};

// --------------------------------------------------- (t = 0)-Macdonald P, Q

struct MacdonaldGuards {
    long long max_patterns = 10'000'000;
};

/// P_lambda(x) = sum over GT patterns with bottom row lambda (padded to
/// N = len(x)) of x^{ty} prod_{1<=j<k<=N} binom(l^k_j - l^k_{j+1},
/// l^k_j - l^{k-1}_j)_q, enumerated depth-first with interlacing pruning.
inline double macdonald_P(const YoungDiagram& lambda, const std::vector<double>& x,
                          const QParams& qp, const MacdonaldGuards& guards = {}) {
    const long long N = static_cast<long long>(x.size());
    if (static_cast<long long>(lambda.rows.size()) > N)
        throw DomainError("macdonald_P: lambda longer than x");
    std::vector<std::vector<long long>> lv(static_cast<std::size_t>(N));
    for (long long k = 1; k <= N; ++k)
        lv[static_cast<std::size_t>(k - 1)].assign(static_cast<std::size_t>(k), 0);
    for (long long j = 1; j <= N; ++j)
        lv[static_cast<std::size_t>(N - 1)][static_cast<std::size_t>(j - 1)] = lambda.row(j);
    auto at = [&lv](long long k, long long j) -> long long& {
        return lv[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(j - 1)];
    };
    long long patterns = 0;
    double total = 0.0;
    // Fill level k-1 given level k, then recurse downward; accumulate the
    // weight when level 1 is fixed.
    const auto weight = [&]() {
        double w = 1.0;
        long long prev_sum = 0;
        for (long long k = 1; k <= N; ++k) {
            long long s = 0;
            for (long long j = 1; j <= k; ++j) s += at(k, j);
            w *= std::pow(x[static_cast<std::size_t>(k - 1)], static_cast<double>(s - prev_sum));
            prev_sum = s;
            for (long long j = 1; j < k; ++j)
                w *= q_binomial(at(k, j) - at(k, j + 1), at(k, j) - at(k - 1, j), qp.q);
        }
        return w;
    };
    const auto rec = [&](auto&& self, long long k, long long j) -> void {
        if (k == 0) {
            if (++patterns > guards.max_patterns)
                throw std::runtime_error("macdonald_P: pattern guard exceeded");
            total += weight();
            return;
        }
        if (j > k) {
            self(self, k - 1, 1);
            return;
        }
        // Interlacing: l^{k+1}_{j+1} <= l^k_j <= l^{k+1}_j, rows decreasing.
        const long long lo = (j < k + 1) ? at(k + 1, j + 1) : 0;
        long long hi = at(k + 1, j);
        if (j > 1) hi = std::min(hi, at(k, j - 1));
        for (long long v = lo; v <= hi; ++v) {
            at(k, j) = v;
            self(self, k, j + 1);
        }
    };
    rec(rec, N - 1, 1);
    return total;
}

/// Q_lambda(x) = (lambda_N)_q^{-1} P_lambda(x) prod_{i=2:N}
/// (lambda_{i-1} - lambda_i)_q^{-1}.
inline double macdonald_Q(const YoungDiagram& lambda, const std::vector<double>& x,
                          const QParams& qp, const MacdonaldGuards& guards = {}) {
    const long long N = static_cast<long long>(x.size());
    double c = 1.0 / q_int(lambda.row(N), qp.q);
    for (long long i = 2; i <= N; ++i) c /= q_int(lambda.row(i - 1) - lambda.row(i), qp.q);
    return c * macdonald_P(lambda, x, qp, guards);
}

inline double whittaker_psi(const YoungDiagram& lambda, const std::vector<double>& x,
                            const QParams& qp, const MacdonaldGuards& guards = {}) {
    return q_int(lambda.row(static_cast<long long>(x.size())), qp.q) *
           macdonald_Q(lambda, x, qp, guards);
}

/// mu_{q-Whittaker}(lambda) = P_lambda(alpha) Q_lambda(alpha_hat)
///                            prod_{ij} (alpha_hat_i alpha_j; q)_inf.
inline double qwhittaker_measure(const YoungDiagram& lambda, const EnvParams& env,
                                 const QParams& qp) {
    env.validate();
    double c = 1.0;
    for (double ah : env.alpha_hat)
        for (double a : env.alpha) c *= q_pochhammer_inf(ah * a, qp.q, qp.inf_tol);
    return macdonald_P(lambda, env.alpha, qp) * macdonald_Q(lambda, env.alpha_hat, qp) * c;
}

// --------------------------------------------------------------- mu_{q,Lambda}

/// Array t on the cells of Lambda.
struct ShapeArray {
    std::map<Cell, long long> t;

    long long at(long long i, long long j) const {
        auto it = t.find({i, j});
        if (it == t.end()) throw DomainError("ShapeArray: cell not set");
        return it->second;
    }
    /// Membership in D_Lambda: rows and columns weakly increasing.
    bool in_D(const YoungDiagram& lam) const {
        for (const Cell& c : lam.cells()) {
            const long long v = at(c.first, c.second);
            if (v < 0) return false;
            if (lam.contains({c.first - 1, c.second}) && at(c.first - 1, c.second) > v)
                return false;
            if (lam.contains({c.first, c.second - 1}) && at(c.first, c.second - 1) > v)
                return false;
        }
        return true;
    }
};

/// Weight-preservation exponents r_j (columns) and r_hat_i (rows) of t on
/// Lambda; these equal the column/row sums of the input array.
inline std::vector<long long> r_exponents(const YoungDiagram& lam, const ShapeArray& t) {
    std::vector<long long> r;
    // Column lengths = conjugate diagram.
    const long long width = lam.row(1);
    for (long long j = 1; j <= width; ++j) {
        long long col = 0;  // Lambda'_j
        while (lam.contains({col + 1, j})) ++col;
        long long v = 0;
        if (j == 1) {
            v = t.at(col, 1);
        } else {
            for (long long k = 1; k <= std::min(j, col); ++k) v += t.at(col - k + 1, j - k + 1);
            for (long long k = 1; k <= std::min(j - 1, col); ++k) v -= t.at(col - k + 1, j - k);
        }
        r.push_back(v);
    }
    return r;
}

inline std::vector<long long> rhat_exponents(const YoungDiagram& lam, const ShapeArray& t) {
    std::vector<long long> rhat;
    for (long long i = 1; i <= static_cast<long long>(lam.rows.size()); ++i) {
        const long long row = lam.row(i);  // Lambda_i
        long long v = 0;
        if (i == 1) {
            v = t.at(1, row);
        } else {
            for (long long k = 1; k <= std::min(i, row); ++k) v += t.at(i - k + 1, row - k + 1);
            for (long long k = 1; k <= std::min(i - 1, row); ++k) v -= t.at(i - k, row - k + 1);
        }
        rhat.push_back(v);
    }
    return rhat;
}

/// The push-forward measure of T_Lambda on a q-geometric environment:
/// mu_{q,Lambda}(t) = (t_11)_q^{-1}
///   * prod_{(i,j),(i-1,j-1) in L} (t_ij - t_{i-1,j-1})_q
///     / [prod (t_ij - t_{i,j-1})_q prod (t_ij - t_{i-1,j})_q]
///   * alpha^r alpha_hat^rhat * prod (ahat_i a_j; q)_inf * 1_{t in D_Lambda}.
/// Accumulated in log space (all factors positive).
inline double mu_q_lambda(const ShapeArray& t, const YoungDiagram& lam, const EnvParams& env,
                          const QParams& qp) {
    env.validate();
    if (!t.in_D(lam)) return 0.0;
    double lg = -std::log(q_int(t.at(1, 1), qp.q));
    for (const Cell& c : lam.cells()) {
        const auto [i, j] = c;
        if (lam.contains({i - 1, j - 1}))
            lg += std::log(q_int(t.at(i, j) - t.at(i - 1, j - 1), qp.q));
        if (lam.contains({i, j - 1})) lg -= std::log(q_int(t.at(i, j) - t.at(i, j - 1), qp.q));
        if (lam.contains({i - 1, j})) lg -= std::log(q_int(t.at(i, j) - t.at(i - 1, j), qp.q));
        lg += std::log(q_pochhammer_inf(env.ahat(i) * env.a(j), qp.q, qp.inf_tol));
    }
    const std::vector<long long> r = r_exponents(lam, t), rh = rhat_exponents(lam, t);
    for (std::size_t j = 0; j < r.size(); ++j)
        lg += static_cast<double>(r[j]) * std::log(env.alpha[j]);
    for (std::size_t i = 0; i < rh.size(); ++i)
        lg += static_cast<double>(rh[i]) * std::log(env.alpha_hat[i]);
    return std::exp(lg);
}

/// Exact verification of the push-forward theorem: sums
/// prod qGeom(w_ij) * P(T_Lambda A = t) over all input arrays with entries
/// <= cap by branch enumeration, and compares against mu_{q,Lambda} on the
/// reachable t-set. Unreachable-t mass appears only through the residual
/// terms, so in exact arithmetic the TV is bounded by the input tail.
inline TvWithTail verify_lmpush(const YoungDiagram& lam, const EnvParams& env, const QParams& qp,
                                long long cap, const EnumGuards& guards = {}) {
    env.validate();
    const std::vector<Cell> cells = lam.cells();
    std::map<std::vector<long long>, double> lhs;
    double covered = 0.0;
    std::vector<long long> w(cells.size(), 0);
    const auto parse = [&cells](const std::string& s) {
        std::vector<long long> t;
        std::size_t pos = 0;
        while (pos < s.size()) {
            const std::size_t comma = s.find(',', pos);
            t.push_back(std::stoll(s.substr(pos, comma - pos)));
            pos = comma + 1;
        }
        return t;
    };
    const auto rec = [&](auto&& self, std::size_t idx, double pw) -> void {
        if (idx == cells.size()) {
            covered += pw;
            EdgeLabeledArray base;
            for (std::size_t c = 0; c < cells.size(); ++c)
                base.set_w(cells[c].first, cells[c].second, w[c]);
            const ExactLaw law = enumerate_procedure(
                [&](ChoiceProvider& cp) {
                    EdgeLabeledArray arr = base;
                    t_lambda(arr, growth_sequence(lam, GrowthStrategy::RowByRow), qp, cp);
                    return arr.str_region(cells);
                },
                guards);
            for (const auto& [key, p] : law.p) lhs[parse(key)] += pw * p;
            return;
        }
        const auto [i, j] = cells[idx];
        for (long long v = 0; v <= cap; ++v) {
            w[idx] = v;
            self(self, idx + 1, pw * qgeom_pmf(env.ahat(i) * env.a(j), qp, v));
        }
    };
    rec(rec, 0, 1.0);
    double l1 = 0.0, mu_reach = 0.0;
    for (const auto& [tv, p] : lhs) {
        ShapeArray t;
        for (std::size_t c = 0; c < cells.size(); ++c) t.t[cells[c]] = tv[c];
        const double mu = mu_q_lambda(t, lam, env, qp);
        l1 += std::abs(p - mu);
        mu_reach += mu;
    }
    return TvWithTail{0.5 * (l1 + (1.0 - covered) + (1.0 - mu_reach)), 1.0 - covered};
}

/// Joint law of the q-polymer at the outer corners of Lambda:
/// sum of mu_{q,Lambda} over t in D_Lambda with the corner entries pinned.
/// Monotonicity bounds every entry by the largest pinned corner, so the sum
/// is finite without an artificial cap.
inline double joint_corner_dist(const YoungDiagram& lam, const EnvParams& env, const QParams& qp,
                                const std::vector<long long>& corner_values) {
    const std::vector<Cell> corners = outer_corners(lam);
    if (corners.size() != corner_values.size())
        throw DomainError("joint_corner_dist: one value per outer corner required");
    long long bound = 0;
    std::map<Cell, long long> pinned;
    for (std::size_t i = 0; i < corners.size(); ++i) {
        if (corner_values[i] < 0) throw DomainError("joint_corner_dist: negative corner value");
        pinned[corners[i]] = corner_values[i];
        bound = std::max(bound, corner_values[i]);
    }
    const std::vector<Cell> cells = lam.cells();  // row-major
    ShapeArray t;
    double total = 0.0;
    const auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == cells.size()) {
            total += mu_q_lambda(t, lam, env, qp);
            return;
        }
        const Cell c = cells[idx];
        long long lo = 0;
        if (lam.contains({c.first - 1, c.second}))
            lo = std::max(lo, t.at(c.first - 1, c.second));
        if (lam.contains({c.first, c.second - 1}))
            lo = std::max(lo, t.at(c.first, c.second - 1));
        const auto pin = pinned.find(c);
        const long long from = pin != pinned.end() ? std::max(pin->second, lo) : lo;
        const long long to = pin != pinned.end() ? pin->second : bound;
        for (long long v = from; v <= to; ++v) {
            t.t[c] = v;
            self(self, idx + 1);
        }
        t.t.erase(c);
    };
    rec(rec, 0);
    return total;
}

/// Both sides of the q-Whittaker corollary for the [n] x [m] rectangle:
/// sum of mu_q over off-diagonal entries with the diagonal pinned to lambda,
/// versus P_lambda(alpha) Q_lambda(alpha_hat) prod (ahat_i a_j; q)_inf.
struct QwhittakerCheck {
    double summed_mu;
    double whittaker;
};

inline QwhittakerCheck verify_qwhittaker_term(long long n, long long m,
                                              const YoungDiagram& lambda, const EnvParams& env,
                                              const QParams& qp) {
    if (static_cast<long long>(lambda.rows.size()) > std::min(n, m))
        throw DomainError("verify_qwhittaker_term: lambda too long");
    std::vector<long long> rect_rows(static_cast<std::size_t>(n), m);
    const YoungDiagram lam(rect_rows);
    std::map<Cell, long long> pinned;
    long long bound = 0;
    for (long long k = 1; k <= std::min(n, m); ++k) {
        pinned[{n - k + 1, m - k + 1}] = lambda.row(k);
        bound = std::max(bound, lambda.row(k));
    }
    const std::vector<Cell> cells = lam.cells();
    ShapeArray t;
    double total = 0.0;
    const auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == cells.size()) {
            total += mu_q_lambda(t, lam, env, qp);
            return;
        }
        const Cell c = cells[idx];
        long long lo = 0;
        if (lam.contains({c.first - 1, c.second}))
            lo = std::max(lo, t.at(c.first - 1, c.second));
        if (lam.contains({c.first, c.second - 1}))
            lo = std::max(lo, t.at(c.first, c.second - 1));
        const auto pin = pinned.find(c);
        if (pin != pinned.end()) {
            if (pin->second >= lo) {
                t.t[c] = pin->second;
                self(self, idx + 1);
                t.t.erase(c);
            }
            return;
        }
        for (long long v = lo; v <= bound; ++v) {
            t.t[c] = v;
            self(self, idx + 1);
        }
        t.t.erase(c);
    };
    rec(rec, 0);
    return QwhittakerCheck{total, qwhittaker_measure(lambda, env, qp)};
}

}  // namespace qp
