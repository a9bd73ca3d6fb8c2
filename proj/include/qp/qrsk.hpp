#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "qp/qdist.hpp"
#include "qp/tableaux.hpp"

// The randomized qRSK row insertion in Noumi-Yamada form, the full matrix
// algorithm with P- and Q-patterns, and the deterministic q = 0 (RSK) and
// geometrically lifted (gRSK) reference algorithms with their brute-force
// last-passage / partition-function oracles.

namespace qp {

using Matrix = std::vector<std::vector<long long>>;      // w[i-1][j-1] = w_{i,j}
using RealMatrix = std::vector<std::vector<double>>;

/// One row insertion: patterns before/after plus the propagated values
/// a^j_k (level j, edge k), a[j-1][k-1] for 1 <= k <= j <= m.
struct InsertionTrace {
    GTPattern before, after;
    std::vector<std::vector<long long>> a;
};

/// Noumi-Yamada qRSK insertion of `row` (length m = depth) into `p`.
/// Loop order: edges k ascending, then levels j from the edge index up.
///   j = k:  lt^k_k = l^k_k + a^k_k
///   j > k:  a^j_{k+1} ~ qHyp(lt^{j-1}_k - l^{j-1}_k,
///                            l^{j-1}_{k-1} - lt^{j-1}_k,     (infinite at k=1)
///                            l^j_k - l^{j-1}_k)
///           lt^j_k = a^j_k + l^j_k + lt^{j-1}_k - l^{j-1}_k - a^j_{k+1}
inline InsertionTrace qrsk_insert_row(const GTPattern& p, const std::vector<long long>& row,
                                      const QParams& qp, ChoiceProvider& cp) {
    const long long m = p.depth();
    if (static_cast<long long>(row.size()) != m)
        throw DomainError("qrsk_insert_row: row length must equal pattern depth");
    if (!p.valid()) throw DomainError("qrsk_insert_row: invalid GT pattern");
    for (long long w : row)
        if (w < 0) throw DomainError("qrsk_insert_row: negative row entry");

    InsertionTrace tr;
    tr.before = p;
    tr.after = p;
    tr.a.resize(static_cast<std::size_t>(m));
    for (long long j = 1; j <= m; ++j) {
        tr.a[static_cast<std::size_t>(j - 1)].assign(static_cast<std::size_t>(j), 0);
        tr.a[static_cast<std::size_t>(j - 1)][0] = row[static_cast<std::size_t>(j - 1)];
    }
    auto a = [&tr](long long j, long long k) -> long long& {
        return tr.a[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(k - 1)];
    };

    GTPattern& lt = tr.after;  // lambda-tilde, updated in place edge by edge
    for (long long k = 1; k <= m; ++k) {
        for (long long j = k; j <= m; ++j) {
            if (j == k) {
                lt.at(k, k) = p.at(k, k) + a(k, k);
                continue;
            }
            const long long m1 = lt.at(j - 1, k) - p.at(j - 1, k);
            const ExtInt m2 =
                (k == 1) ? ExtInt::inf() : ExtInt(p.at(j - 1, k - 1) - lt.at(j - 1, k));
            const long long kk = p.at(j, k) - p.at(j - 1, k);
            const long long draw = cp.choose(qhyp_table(m1, m2, kk, qp));
            a(j, k + 1) = draw;
            lt.at(j, k) = a(j, k) + p.at(j, k) + lt.at(j - 1, k) - p.at(j - 1, k) - draw;
        }
    }
    return tr;
}

/// Deterministic RSK insertion (max-plus recursion; exact q = 0 limit).
inline InsertionTrace rsk_insert_row(const GTPattern& p, const std::vector<long long>& row) {
    const long long m = p.depth();
    if (static_cast<long long>(row.size()) != m)
        throw DomainError("rsk_insert_row: row length must equal pattern depth");
    InsertionTrace tr;
    tr.before = p;
    tr.after = p;
    tr.a.resize(static_cast<std::size_t>(m));
    for (long long j = 1; j <= m; ++j) {
        tr.a[static_cast<std::size_t>(j - 1)].assign(static_cast<std::size_t>(j), 0);
        tr.a[static_cast<std::size_t>(j - 1)][0] = row[static_cast<std::size_t>(j - 1)];
    }
    auto a = [&tr](long long j, long long k) -> long long& {
        return tr.a[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(k - 1)];
    };
    GTPattern& lt = tr.after;
    for (long long k = 1; k <= m; ++k)
        for (long long j = k; j <= m; ++j) {
            if (j == k) {
                lt.at(k, k) = p.at(k, k) + a(k, k);
                continue;
            }
            lt.at(j, k) = a(j, k) + std::max(p.at(j, k), lt.at(j - 1, k));
            a(j, k + 1) =
                a(j, k) + p.at(j, k) - lt.at(j, k) + lt.at(j - 1, k) - p.at(j - 1, k);
        }
    return tr;
}

struct QrskOutput {
    GTPattern p_pattern;                // lambda^k_j(n)
    GTPattern q_pattern;                // mu^l_j = lambda^m_j(l)
    std::vector<GTPattern> evolution;   // lambda(0), ..., lambda(n); empty unless kept
};

template <typename InsertFn>
inline QrskOutput run_matrix_algorithm(const Matrix& A, long long m, bool keep_history,
                                       InsertFn&& insert) {
    const long long n = static_cast<long long>(A.size());
    for (const auto& r : A)
        if (static_cast<long long>(r.size()) != m)
            throw DomainError("qrsk_matrix: ragged input matrix");
    QrskOutput out;
    out.p_pattern = GTPattern(m);
    out.q_pattern = GTPattern(n);
    if (keep_history) out.evolution.push_back(out.p_pattern);
    for (long long l = 1; l <= n; ++l) {
        out.p_pattern = insert(out.p_pattern, A[static_cast<std::size_t>(l - 1)]).after;
        for (long long j = 1; j <= std::min(l, m); ++j)
            out.q_pattern.at(l, j) = out.p_pattern.at(m, j);
        if (keep_history) out.evolution.push_back(out.p_pattern);
    }
    return out;
}

inline QrskOutput qrsk_matrix(const Matrix& A, const QParams& qp, ChoiceProvider& cp,
                              bool keep_history = false) {
    const long long m = A.empty() ? 0 : static_cast<long long>(A.front().size());
    return run_matrix_algorithm(A, m, keep_history,
                                [&](const GTPattern& p, const std::vector<long long>& row) {
                                    return qrsk_insert_row(p, row, qp, cp);
                                });
}

inline QrskOutput rsk_matrix(const Matrix& A, bool keep_history = false) {
    const long long m = A.empty() ? 0 : static_cast<long long>(A.front().size());
    return run_matrix_algorithm(A, m, keep_history,
                                [&](const GTPattern& p, const std::vector<long long>& row) {
                                    return rsk_insert_row(p, row);
                                });
}

// ------------------------------------------------------------------- gRSK

/// Real-valued pattern z^j_k for the geometric lifting. A level is inactive
/// (all zero) until the insertion count reaches its edge index; the
/// multiplicative recursion starts each edge with an activation step.
struct GrskState {
    std::vector<std::vector<double>> z;  // z[j-1][k-1], triangular
    long long inserted = 0;

    explicit GrskState(long long m) {
        z.resize(static_cast<std::size_t>(m));
        for (long long j = 1; j <= m; ++j)
            z[static_cast<std::size_t>(j - 1)].assign(static_cast<std::size_t>(j), 0.0);
    }
    long long depth() const { return static_cast<long long>(z.size()); }
    double& at(long long j, long long k) {
        return z[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(k - 1)];
    }
    double at(long long j, long long k) const {
        return z[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(k - 1)];
    }
};

/// gRSK insertion: z~^k_k = z^k_k a^k_k; z~^j_k = a^j_k (z^j_k + z~^{j-1}_k);
/// a^j_{k+1} = a^j_k z^j_k z~^{j-1}_k / (z~^j_k z^{j-1}_k). Edge k is skipped
/// until insertion k; at insertion k it activates with z~^k_k = a^k_k,
/// z~^j_k = a^j_k z~^{j-1}_k and propagates a^j_{k+1} = 0 (edge k+1 is still
/// dormant this round).
inline void grsk_insert_row(GrskState& st, const std::vector<double>& wrow) {
    const long long m = st.depth();
    if (static_cast<long long>(wrow.size()) != m)
        throw DomainError("grsk_insert_row: row length must equal pattern depth");
    const long long ell = ++st.inserted;
    std::vector<std::vector<double>> a(static_cast<std::size_t>(m));
    for (long long j = 1; j <= m; ++j) {
        a[static_cast<std::size_t>(j - 1)].assign(static_cast<std::size_t>(j), 0.0);
        a[static_cast<std::size_t>(j - 1)][0] = std::exp(wrow[static_cast<std::size_t>(j - 1)]);
    }
    auto av = [&a](long long j, long long k) -> double& {
        return a[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(k - 1)];
    };
    GrskState old = st;
    for (long long k = 1; k <= std::min(ell, m); ++k) {
        const bool activating = (k == ell);
        for (long long j = k; j <= m; ++j) {
            if (j == k) {
                st.at(k, k) = activating ? av(k, k) : old.at(k, k) * av(k, k);
                continue;
            }
            if (activating) {
                st.at(j, k) = av(j, k) * st.at(j - 1, k);
                if (k < j) av(j, k + 1) = 0.0;
            } else {
                st.at(j, k) = av(j, k) * (old.at(j, k) + st.at(j - 1, k));
                av(j, k + 1) =
                    av(j, k) * old.at(j, k) * st.at(j - 1, k) / (st.at(j, k) * old.at(j - 1, k));
            }
        }
    }
}

inline GrskState grsk_matrix(const RealMatrix& W) {
    const long long m = W.empty() ? 0 : static_cast<long long>(W.front().size());
    GrskState st(m);
    for (const auto& row : W) grsk_insert_row(st, row);
    return st;
}

// ------------------------------------------------- brute-force path oracles

namespace detail {
template <typename T, typename Combine>
inline void for_each_path_weight(const std::vector<std::vector<T>>& A, Combine&& f) {
    const long long n = static_cast<long long>(A.size());
    const long long m = n == 0 ? 0 : static_cast<long long>(A.front().size());
    if (n == 0 || m == 0) throw DomainError("path oracle: empty matrix");
    if (n + m - 1 > 24) throw DomainError("path oracle: matrix too large");
    std::vector<T> acc;
    const auto rec = [&](auto&& self, long long i, long long j, T sum) -> void {
        sum += A[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
        if (i == n && j == m) {
            f(sum);
            return;
        }
        if (i < n) self(self, i + 1, j, sum);
        if (j < m) self(self, i, j + 1, sum);
    };
    rec(rec, 1, 1, T(0));
}
}  // namespace detail

/// Z_0: max over up-right lattice paths (1,1) -> (n,m) of the path sum.
inline long long dlpp_bruteforce(const Matrix& A) {
    long long best = std::numeric_limits<long long>::min();
    detail::for_each_path_weight(A, [&](long long s) { best = std::max(best, s); });
    return best;
}

/// Z_1: log of the sum over up-right paths of exp(path sum).
inline double dp_partition_bruteforce(const RealMatrix& W) {
    // log-sum-exp over all paths, stabilised by the running max.
    std::vector<double> sums;
    detail::for_each_path_weight(W, [&](double s) { sums.push_back(s); });
    const double mx = *std::max_element(sums.begin(), sums.end());
    double acc = 0.0;
    for (double s : sums) acc += std::exp(s - mx);
    return mx + std::log(acc);
}

// ------------------------------------------------ structural lemma checking

struct StructuralReport {
    long long runs = 0;
    long long zero_violations = 0;        // lambda^j_k(n) != 0 for n < k
    long long boundary_violations = 0;    // upper-boundary identities
    long long interlacing_violations = 0; // lambda(l-1) !< lambda(l) edge-wise
    long long weight_violations = 0;      // weight preservation
    long long total_violations() const {
        return zero_violations + boundary_violations + interlacing_violations + weight_violations;
    }
};

/// Runs qRSK `reps` times on A and asserts Lemmas on zero propagation, the
/// upper boundary, interlacing in time, and weight preservation.
inline StructuralReport check_structural_lemmas(const Matrix& A, const QParams& qp, RngStream& rng,
                                                long long reps) {
    StructuralReport rep;
    const long long n = static_cast<long long>(A.size());
    const long long m = n == 0 ? 0 : static_cast<long long>(A.front().size());
    for (long long r = 0; r < reps; ++r) {
        ++rep.runs;
        SamplingProvider cp(rng);
        GTPattern p(m);
        std::vector<InsertionTrace> traces;
        for (long long l = 1; l <= n; ++l) {
            traces.push_back(qrsk_insert_row(p, A[static_cast<std::size_t>(l - 1)], qp, cp));
            const GTPattern& next = traces.back().after;
            // lambda(l-1) interlaces lambda(l) on every level.
            for (long long k = 1; k <= m; ++k)
                if (!interlaces(p.level(k), next.level(k))) ++rep.interlacing_violations;
            p = next;
            // Lemma: lambda^j_k(l) = 0 whenever l < k.
            for (long long k = l + 1; k <= m; ++k)
                for (long long j = k; j <= m; ++j)
                    if (p.at(j, k) != 0) ++rep.zero_violations;
            // Upper boundary at time l (edge index l <= m):
            //   lambda^k_l(l) = lambda^{k-1}_l(l) + a^k_l(l) for k > l,
            //   lambda^l_l(l) = a^l_l(l).
            if (l <= m) {
                const auto& a = traces.back().a;
                for (long long k = l; k <= m; ++k) {
                    const long long lhs = p.at(k, l);
                    const long long rhs =
                        (k > l ? p.at(k - 1, l) : 0) +
                        a[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(l - 1)];
                    if (lhs != rhs) ++rep.boundary_violations;
                }
            }
            // Weight preservation at every (k, l).
            for (long long k = 1; k <= m; ++k) {
                long long lhs = 0, rhs = 0;
                for (long long j = 1; j <= k; ++j) lhs += p.at(k, j);
                for (long long i = 1; i <= l; ++i)
                    for (long long j = 1; j <= k; ++j)
                        rhs += A[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
                if (lhs != rhs) ++rep.weight_violations;
            }
        }
    }
    return rep;
}

}  // namespace qp
