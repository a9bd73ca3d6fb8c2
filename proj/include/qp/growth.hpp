#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "qp/oracle.hpp"
#include "qp/qrsk.hpp"

// Branching growth-diagram machinery: the local rule F, exact label
// distributions along down-right paths, and the (P,Q) <-> (Q,P) symmetry
// check under matrix transposition.

namespace qp {

/// Vertices (j, k) = (time, level) from (0, m) to (n, 0); each step is
/// (+1, 0) or (0, -1).
struct DownRightPath {
    std::vector<std::pair<long long, long long>> vertices;

    bool valid() const {
        if (vertices.size() < 2) return false;
        if (vertices.front().first != 0 || vertices.back().second != 0) return false;
        for (std::size_t i = 1; i < vertices.size(); ++i) {
            const long long dj = vertices[i].first - vertices[i - 1].first;
            const long long dk = vertices[i].second - vertices[i - 1].second;
            if (!((dj == 1 && dk == 0) || (dj == 0 && dk == -1))) return false;
        }
        return true;
    }
    /// The staircase pi*: (0,m) -> (n,m) -> (n,0).
    static DownRightPath staircase(long long n, long long m) {
        DownRightPath p;
        for (long long j = 0; j <= n; ++j) p.vertices.emplace_back(j, m);
        for (long long k = m - 1; k >= 0; --k) p.vertices.emplace_back(n, k);
        return p;
    }
    /// Transpose pi': vertices swapped and reversed.
    DownRightPath transpose() const {
        DownRightPath p;
        for (auto it = vertices.rbegin(); it != vertices.rend(); ++it)
            p.vertices.emplace_back(it->second, it->first);
        return p;
    }
};

/// One sampled application of the local rule
///   F_k = mu2_k + mu1_k - lam_k + x_k - x_{k+1},
///   x_1 = x,  x_{k+1} ~ qHyp(mu1_k - lam_k, lam_{k-1} - mu1_k, mu2_k - lam_k)
/// with lam_0 = infinity and trailing-zero padding.
inline YoungDiagram local_rule_apply(const YoungDiagram& lam, const YoungDiagram& mu1,
                                     const YoungDiagram& mu2, long long x, const QParams& qp,
                                     ChoiceProvider& cp) {
    if (x < 0) throw DomainError("local_rule_apply: x must be >= 0");
    if (!interlaces(lam, mu1) || !interlaces(lam, mu2))
        throw DomainError("local_rule_apply: lam must interlace mu1 and mu2");
    const long long depth =
        1 + std::max<long long>(static_cast<long long>(mu1.rows.size()),
                                static_cast<long long>(mu2.rows.size()));
    std::vector<long long> out;
    long long xk = x;
    for (long long k = 1; k <= depth; ++k) {
        const long long m1 = mu1.row(k) - lam.row(k);
        const ExtInt m2 = (k == 1) ? ExtInt::inf() : ExtInt(lam.row(k - 1) - mu1.row(k));
        const long long kk = mu2.row(k) - lam.row(k);
        const long long xk1 = cp.choose(qhyp_table(m1, m2, kk, qp));
        out.push_back(mu2.row(k) + mu1.row(k) - lam.row(k) + xk - xk1);
        xk = xk1;
    }
    // Beyond the working depth every row is 0 and the qHyp draw is pinned to
    // 0, so the remaining mass xk must already be exhausted.
    if (xk != 0) throw DomainError("local_rule_apply: residual mass beyond working depth");
    return YoungDiagram(out);
}

using DiagramDist = std::map<YoungDiagram, double>;

/// Exact output distribution of the local rule (enumerates the x-chain).
inline DiagramDist local_rule_pmf(const YoungDiagram& lam, const YoungDiagram& mu1,
                                  const YoungDiagram& mu2, long long x, const QParams& qp) {
    DiagramDist dist;
    const long long depth =
        1 + std::max<long long>(static_cast<long long>(mu1.rows.size()),
                                static_cast<long long>(mu2.rows.size()));
    if (!interlaces(lam, mu1) || !interlaces(lam, mu2))
        throw DomainError("local_rule_pmf: lam must interlace mu1 and mu2");
    std::vector<long long> rows(static_cast<std::size_t>(depth), 0);
    const auto rec = [&](auto&& self, long long k, long long xk, double prob) -> void {
        if (k > depth) {
            if (xk == 0) dist[YoungDiagram(rows)] += prob;
            return;
        }
        const long long m1 = mu1.row(k) - lam.row(k);
        const ExtInt m2 = (k == 1) ? ExtInt::inf() : ExtInt(lam.row(k - 1) - mu1.row(k));
        const long long kk = mu2.row(k) - lam.row(k);
        const DiscretePmf pmf = qhyp_table(m1, m2, kk, qp);
        for (long long xk1 = pmf.support_min(); xk1 <= pmf.support_max(); ++xk1) {
            const double p = pmf.at(xk1);
            if (p <= 0.0) continue;
            rows[static_cast<std::size_t>(k - 1)] =
                mu2.row(k) + mu1.row(k) - lam.row(k) + xk - xk1;
            self(self, k + 1, xk1, prob * p);
        }
    };
    rec(rec, 1, x, 1.0);
    return dist;
}

inline double tv_distance(const DiagramDist& a, const DiagramDist& b) {
    double s = 0.0;
    for (const auto& [k, v] : a) {
        auto it = b.find(k);
        s += std::abs(v - (it == b.end() ? 0.0 : it->second));
    }
    for (const auto& [k, v] : b)
        if (!a.count(k)) s += v;
    return 0.5 * s;
}

/// Serialised tuple of Young diagrams labelled along `path`:
/// L(A, pi) = (lambda^{k_i}(j_i))_i, with lambda^0 = empty.
inline std::string path_labels(const std::vector<GTPattern>& evolution, const DownRightPath& path) {
    std::string s;
    for (const auto& [j, k] : path.vertices) {
        const GTPattern& pat = evolution[static_cast<std::size_t>(j)];
        s += (k == 0 || k > pat.depth()) ? YoungDiagram().str() : pat.level(k).str();
    }
    return s;
}

/// Exact joint law of the diagram labels along `path` under qRSK on A.
inline ExactLaw path_label_dist(const Matrix& A, const DownRightPath& path, const QParams& qp,
                                const EnumGuards& guards = {}) {
    if (!path.valid()) throw DomainError("path_label_dist: invalid down-right path");
    return enumerate_procedure(
        [&](ChoiceProvider& cp) {
            return path_labels(qrsk_matrix(A, qp, cp, /*keep_history=*/true).evolution, path);
        },
        guards);
}

inline Matrix transpose(const Matrix& A) {
    const std::size_t n = A.size(), m = n == 0 ? 0 : A.front().size();
    Matrix T(m, std::vector<long long>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) T[j][i] = A[i][j];
    return T;
}

/// TV distance between the exact (P,Q) law of qRSK(A) and the swapped (Q,P)
/// law of qRSK(A'). Zero in exact arithmetic by the symmetry theorem.
inline double check_symmetry(const Matrix& A, const QParams& qp, const EnumGuards& guards = {}) {
    const auto pq_law = [&](const Matrix& M, bool swapped) {
        return enumerate_procedure(
            [&](ChoiceProvider& cp) {
                const QrskOutput out = qrsk_matrix(M, qp, cp);
                return swapped ? out.q_pattern.str() + "|" + out.p_pattern.str()
                               : out.p_pattern.str() + "|" + out.q_pattern.str();
            },
            guards);
    };
    return tv_distance(pq_law(A, false), pq_law(transpose(A), true));
}

}  // namespace qp
