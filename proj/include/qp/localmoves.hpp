#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "qp/growth.hpp"
#include "qp/oracle.hpp"
#include "qp/qrsk.hpp"
#include "qp/tableaux.hpp"

// q-local moves l, l', their diagonal composites rho_{n,k} and T_Lambda on
// edge-labeled arrays, the equivalence with qRSK (Theorem on Lambda
// coordinates), and the qPNG built on the staircase specialization.

namespace qp {

/// Integer array on N_{>0}^2 (finite active region, zero elsewhere) with
/// labelled horizontal edges: e_{ij} sits between w_{i,j-1} and w_{i,j} and
/// starts at infinity.
struct EdgeLabeledArray {
    std::map<Cell, long long> entries;
    std::map<Cell, ExtInt> hedges;

    long long w(long long i, long long j) const {
        auto it = entries.find({i, j});
        return it == entries.end() ? 0 : it->second;
    }
    void set_w(long long i, long long j, long long v) {
        if (i < 1 || j < 1) throw DomainError("EdgeLabeledArray: coordinates must be >= 1");
        entries[{i, j}] = v;
    }
    ExtInt e(long long i, long long j) const {
        auto it = hedges.find({i, j});
        return it == hedges.end() ? ExtInt::inf() : it->second;
    }
    void set_e(long long i, long long j, ExtInt v) { hedges[{i, j}] = v; }

    static EdgeLabeledArray from_matrix(const Matrix& A) {
        EdgeLabeledArray arr;
        for (std::size_t i = 0; i < A.size(); ++i)
            for (std::size_t j = 0; j < A[i].size(); ++j)
                arr.set_w(static_cast<long long>(i + 1), static_cast<long long>(j + 1), A[i][j]);
        return arr;
    }
    std::string str_region(const std::vector<Cell>& cells) const {
        std::string s;
        for (const Cell& c : cells) s += std::to_string(w(c.first, c.second)) + ",";
        return s;
    }
};

/// The move l at (i, j), acting on the window
///   ( a   b )      a = w_{i-1,j-1}, b = w_{i-1,j},
///   ( c -e- d )    c = w_{i,j-1},   d = w_{i,j},  e = e_{ij}:
/// interior: a' ~ qHyp(c - a, e, b - a); (a, d) := (a', b + c + d - a - a').
/// Boundaries: i = 1: d := c + d; j = 1: d := b + d; i = j = 1: unchanged.
inline void apply_l(EdgeLabeledArray& arr, long long i, long long j, const QParams& qp,
                    ChoiceProvider& cp) {
    if (i < 1 || j < 1) throw DomainError("apply_l: coordinates must be >= 1");
    if (i == 1 && j == 1) return;
    if (i == 1) {
        arr.set_w(1, j, arr.w(1, j - 1) + arr.w(1, j));
        return;
    }
    if (j == 1) {
        arr.set_w(i, 1, arr.w(i - 1, 1) + arr.w(i, 1));
        return;
    }
    const long long a = arr.w(i - 1, j - 1), b = arr.w(i - 1, j);
    const long long c = arr.w(i, j - 1), d = arr.w(i, j);
    if (c < a || b < a) throw DomainError("apply_l: malformed window (need a <= b, a <= c)");
    const long long ap = cp.choose(qhyp_table(c - a, arr.e(i, j), b - a, qp));
    arr.set_w(i - 1, j - 1, ap);
    arr.set_w(i, j, b + c + d - a - ap);
}

/// The move l' at (i, j): stores e_{ij} := w_{ij} - w_{i,j-1} in the interior;
/// boundary windows (i = 1 or j = 1) set no label.
inline void apply_lprime(EdgeLabeledArray& arr, long long i, long long j) {
    if (i < 1 || j < 1) throw DomainError("apply_lprime: coordinates must be >= 1");
    if (i == 1 || j == 1) return;
    arr.set_e(i, j, ExtInt(arr.w(i, j) - arr.w(i, j - 1)));
}

/// rho_{n,k}: the l-chain down the diagonal through (n, k), then the l'-chain
/// down the diagonal through (n - 1, k) (storing labels for rho_{n, k+1}).
inline void apply_rho(EdgeLabeledArray& arr, long long n, long long k, const QParams& qp,
                      ChoiceProvider& cp) {
    if (n < 1 || k < 1) throw DomainError("apply_rho: coordinates must be >= 1");
    for (long long i = n, j = k; i >= std::max<long long>(n - k, 0) + 1 &&
                                 j >= std::max<long long>(k - n, 0) + 1;
         --i, --j)
        apply_l(arr, i, j, qp, cp);
    for (long long i = n - 1, j = k; i >= std::max<long long>(n - 1 - k, 0) + 1 &&
                                     j >= std::max<long long>(k - n + 1, 0) + 1;
         --i, --j)
        apply_lprime(arr, i, j);
}

/// The tri-diagonal strip encoding of rho_{n,k} (bulk case n > k >= 2),
/// via the aliases a_i, b_i, c_i, d_i and draws X_i:
///   X_1 ~ qHyp(c_1 - d_2, inf, b_1 - d_2),
///   X_i ~ qHyp(c_i - d_{i+1}, d_i - c_i, b_i - d_{i+1}),  i = 2 : k-1,
///   a_0 = b_1 + c_1 - d_2 + d_1 - X_1,
///   a_i = b_{i+1} + c_{i+1} - d_{i+2} + X_i - X_{i+1},    i = 1 : k-2,
///   a_{k-1} = b_k + X_{k-1}.
/// Implemented independently of apply_rho as a transcription check.
inline void apply_rho_strip(EdgeLabeledArray& arr, long long n, long long k, const QParams& qp,
                            ChoiceProvider& cp) {
    if (!(n > k && k >= 2)) throw DomainError("apply_rho_strip: requires n > k >= 2");
    auto b = [&](long long i) { return arr.w(n - i, k - i + 1); };
    auto c = [&](long long i) { return arr.w(n - i + 1, k - i); };
    auto d = [&](long long i) { return arr.w(n - i + 1, k - i + 1); };
    std::vector<long long> X(static_cast<std::size_t>(k), 0);  // X[1..k-1] used
    std::vector<long long> a(static_cast<std::size_t>(k), 0);
    X[1] = cp.choose(qhyp_table(c(1) - d(2), ExtInt::inf(), b(1) - d(2), qp));
    for (long long i = 2; i <= k - 1; ++i)
        X[static_cast<std::size_t>(i)] = cp.choose(
            qhyp_table(c(i) - d(i + 1), ExtInt(d(i) - c(i)), b(i) - d(i + 1), qp));
    a[0] = b(1) + c(1) - d(2) + d(1) - X[1];
    for (long long i = 1; i <= k - 2; ++i)
        a[static_cast<std::size_t>(i)] = b(i + 1) + c(i + 1) - d(i + 2) +
                                         X[static_cast<std::size_t>(i)] -
                                         X[static_cast<std::size_t>(i + 1)];
    a[static_cast<std::size_t>(k - 1)] = b(k) + X[static_cast<std::size_t>(k - 1)];
    for (long long i = 0; i <= k - 1; ++i)
        arr.set_w(n - i, k - i, a[static_cast<std::size_t>(i)]);
}

/// T_Lambda = rho_{Lambda(N)/Lambda(N-1)} o ... o rho_{Lambda(1)/empty}.
inline void t_lambda(EdgeLabeledArray& arr, const GrowthSequence& seq, const QParams& qp,
                     ChoiceProvider& cp) {
    if (!seq.valid()) throw DomainError("t_lambda: invalid growth sequence");
    for (std::size_t l = 1; l < seq.diagrams.size(); ++l) {
        const Cell c = seq.added_cell(l);
        apply_rho(arr, c.first, c.second, qp, cp);
    }
}

/// TV distance between the exact law of (T_Lambda A)|_Lambda and the exact
/// law of the qRSK output on the covering rectangle placed by
/// Lambda-coordinates: t_{i',j'} = lambda^j_k(i).
inline double check_qrsk_equivalence(const YoungDiagram& lam, const Matrix& A, const QParams& qp,
                                     const EnumGuards& guards = {}) {
    const long long nhat = static_cast<long long>(lam.rows.size());
    const long long mhat = lam.row(1);
    if (static_cast<long long>(A.size()) < nhat ||
        (nhat > 0 && static_cast<long long>(A.front().size()) < mhat))
        throw DomainError("check_qrsk_equivalence: A must cover Lambda");
    Matrix rect(static_cast<std::size_t>(nhat));
    for (long long i = 0; i < nhat; ++i)
        rect[static_cast<std::size_t>(i)] =
            std::vector<long long>(A[static_cast<std::size_t>(i)].begin(),
                                   A[static_cast<std::size_t>(i)].begin() + mhat);
    const std::vector<Cell> cells = lam.cells();

    const ExactLaw lm_law = enumerate_procedure(
        [&](ChoiceProvider& cp) {
            EdgeLabeledArray arr = EdgeLabeledArray::from_matrix(rect);
            t_lambda(arr, growth_sequence(lam, GrowthStrategy::RowByRow), qp, cp);
            return arr.str_region(cells);
        },
        guards);
    const ExactLaw rsk_law = enumerate_procedure(
        [&](ChoiceProvider& cp) {
            const QrskOutput out = qrsk_matrix(rect, qp, cp, /*keep_history=*/true);
            std::string s;
            for (const Cell& c : cells) {
                const LambdaCoordinate lc = lambda_coordinate(lam, c);
                s += std::to_string(
                         out.evolution[static_cast<std::size_t>(lc.i)].at(lc.j, lc.k)) +
                     ",";
            }
            return s;
        },
        guards);
    return tv_distance(lm_law, rsk_law);
}

// ----------------------------------------------------------------------- qPNG

/// Multilayer qPNG state at time m, realized as a view over the local moves
/// acting on the staircase array (w_{ij})_{i+j <= m+1} with the parity
/// identifications
///   d_m(k)   = w_{(m+1-k)/2, (m+1+k)/2},
///   h^j_m(k) = t_{(m+1-k)/2 - j, (m+1+k)/2 - j}    (k = m+1 mod 2),
/// heights at off-parity positions carrying over from the previous snapshot.
struct PngState {
    long long time = 0;
    EdgeLabeledArray arr;                       // the evolving staircase array
    std::map<std::pair<long long, long long>, long long> heights;  // (level j, pos k)
    std::map<long long, long long> top_droplets_last;              // inputs at `time`

    long long h(long long j, long long k) const {
        auto it = heights.find({j, k});
        return it == heights.end() ? 0 : it->second;
    }
};

/// Advances the qPNG by one time step. `droplets` maps position k to d_m(k);
/// nonzero droplets must satisfy |k| < m and k = m+1 (mod 2).
inline PngState qpng_step(const PngState& prev, const std::map<long long, long long>& droplets,
                          const QParams& qp, ChoiceProvider& cp) {
    PngState st = prev;
    const long long m = ++st.time;
    st.top_droplets_last = droplets;
    for (const auto& [k, d] : droplets) {
        if (d < 0) throw DomainError("qpng_step: negative droplet");
        if (d == 0) continue;
        if (!(std::abs(k) < m) || ((m + 1 - k) % 2) != 0)
            throw DomainError("qpng_step: droplet outside cone or off parity");
        st.arr.set_w((m + 1 - k) / 2, (m + 1 + k) / 2, d);
    }
    // Time m appends the antidiagonal i + j = m + 1 to the staircase:
    // rho at (1, m), (2, m-1), ..., (m, 1).
    for (long long i = 1; i <= m; ++i) apply_rho(st.arr, i, m + 1 - i, qp, cp);
    // Refresh the height snapshot: parity sites read the array, off-parity
    // sites carry over.
    std::map<std::pair<long long, long long>, long long> hs;
    for (long long j = 0; 2 * j < m; ++j)
        for (long long k = -(m - 1 - 2 * j); k <= m - 1 - 2 * j; ++k) {
            if (((m + 1 - k) % 2) == 0) {
                const long long i = (m + 1 - k) / 2 - j, jj = (m + 1 + k) / 2 - j;
                if (i >= 1 && jj >= 1) {
                    const long long v = st.arr.w(i, jj);
                    if (v != 0) hs[{j, k}] = v;
                }
            } else {
                const long long v = prev.h(j, k);
                if (v != 0) hs[{j, k}] = v;
            }
        }
    st.heights = std::move(hs);
    return st;
}

}  // namespace qp
