#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <tuple>
#include <vector>

#include "qp/qdist.hpp"
#include "qp/qrsk.hpp"

// The q-polymer Z(n,m) = lambda^m_1(n): local recursion, Burke relations and
// the q-Burke property, stationary boundary conditions, LLN experiments, and
// the stationary geometric q-pushTASEP.

namespace qp {

struct BurkeTriple {
    long long u, v, x;
};

/// One Burke step: X' ~ qHyp(U, inf, V); U' = U + X - X', V' = V + X - X'.
/// The identity U' - U = V' - V = X - X' (B1.q) holds by construction.
inline BurkeTriple burke_step(long long U, long long V, long long X, const QParams& qp,
                              ChoiceProvider& cp) {
    if (U < 0 || V < 0 || X < 0) throw DomainError("burke_step: inputs must be >= 0");
    const long long Xp = cp.choose(qhyp_table(U, ExtInt::inf(), V, qp));
    return BurkeTriple{U + X - Xp, V + X - Xp, Xp};
}

struct TvWithTail {
    double tv;
    double tail;
};

/// Exact verification of the q-Burke property: with U ~ qGeom(alpha),
/// V ~ qGeom(beta), X ~ qGeom(alpha beta) truncated at `cap`, the joint law
/// of (U', V', X') is compared against the product law. The reported TV is
/// bounded by the input truncation tail in exact arithmetic.
inline TvWithTail check_qburke(double alpha, double beta, const QParams& qp, long long cap = 40) {
    if (!(alpha * beta < 1.0)) throw DomainError("check_qburke: need alpha*beta < 1");
    const DiscretePmf pu = qgeom_table(alpha, qp), pv = qgeom_table(beta, qp),
                      px = qgeom_table(alpha * beta, qp);
    auto capped = [cap](const DiscretePmf& p) { return std::min<long long>(cap, p.support_max()); };
    std::map<std::tuple<long long, long long, long long>, double> joint;
    double covered = 0.0;
    for (long long u = 0; u <= capped(pu); ++u)
        for (long long v = 0; v <= capped(pv); ++v)
            for (long long x = 0; x <= capped(px); ++x) {
                const double pin = pu.at(u) * pv.at(v) * px.at(x);
                covered += pin;
                const DiscretePmf t = qhyp_table(u, ExtInt::inf(), v, qp);
                for (long long xp = t.support_min(); xp <= t.support_max(); ++xp) {
                    const double p = t.at(xp);
                    if (p > 0.0) joint[{u + x - xp, v + x - xp, xp}] += pin * p;
                }
            }
    double l1 = 0.0, prod_mass = 0.0;
    for (const auto& [k, p] : joint) {
        const auto [u, v, x] = k;
        const double prod = pu.at(u) * pv.at(v) * px.at(x);
        l1 += std::abs(p - prod);
        prod_mass += prod;
    }
    const double tail = 1.0 - covered;
    return TvWithTail{0.5 * (l1 + (1.0 - covered) + (1.0 - prod_mass)), tail};
}

/// Marginal law of X' from the same exact computation (must be qGeom(ab)).
inline double check_qburke_x_marginal(double alpha, double beta, const QParams& qp,
                                      long long cap = 40) {
    const DiscretePmf pu = qgeom_table(alpha, qp), pv = qgeom_table(beta, qp);
    const DiscretePmf px = qgeom_table(alpha * beta, qp);
    std::map<long long, double> marg;
    for (long long u = 0; u <= std::min<long long>(cap, pu.support_max()); ++u)
        for (long long v = 0; v <= std::min<long long>(cap, pv.support_max()); ++v) {
            const double pin = pu.at(u) * pv.at(v);
            const DiscretePmf t = qhyp_table(u, ExtInt::inf(), v, qp);
            for (long long xp = t.support_min(); xp <= t.support_max(); ++xp)
                marg[xp] += pin * t.at(xp);
        }
    double dev = 0.0;
    for (const auto& [x, p] : marg) dev = std::max(dev, std::abs(p - px.at(x)));
    return dev;
}

/// Z on the requested lattice. For the plain polymer z[l-1][j-1] = Z(l, j)
/// with l, j >= 1; for the stationary polymer z[i][j] = Z(i, j) with the 0th
/// row and column included.
struct PolymerField {
    std::vector<std::vector<long long>> z;
    bool includes_origin = false;

    long long Z(long long l, long long j) const {
        const long long off = includes_origin ? 0 : 1;
        return z[static_cast<std::size_t>(l - off)][static_cast<std::size_t>(j - off)];
    }
    bool monotone() const {
        for (std::size_t i = 0; i < z.size(); ++i)
            for (std::size_t j = 0; j < z[i].size(); ++j) {
                if (i > 0 && z[i][j] < z[i - 1][j]) return false;
                if (j > 0 && z[i][j] < z[i][j - 1]) return false;
            }
        return true;
    }
};

/// q-polymer recursion on N_{>0}^2, row-major draw order (matching the
/// edge-1 draws of qrsk_matrix for shared-draw coupling):
///   Z(n,m) = w_{n,m} + Z(n-1,m) + Z(n,m-1) - Z(n-1,m-1) - X',
///   X' ~ qHyp(Z(n,m-1) - Z(n-1,m-1), inf, Z(n-1,m) - Z(n-1,m-1)).
inline PolymerField polymer_evolve(const Matrix& w, const QParams& qp, ChoiceProvider& cp) {
    const long long n = static_cast<long long>(w.size());
    const long long m = n == 0 ? 0 : static_cast<long long>(w.front().size());
    PolymerField f;
    f.z.assign(static_cast<std::size_t>(n), std::vector<long long>(static_cast<std::size_t>(m)));
    auto W = [&w](long long i, long long j) {
        const long long v = w[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
        if (v < 0) throw DomainError("polymer_evolve: negative weight");
        return v;
    };
    for (long long i = 1; i <= n; ++i)
        for (long long j = 1; j <= m; ++j) {
            long long v;
            if (i == 1 && j == 1) v = W(1, 1);
            else if (i == 1) v = f.Z(1, j - 1) + W(1, j);
            else if (j == 1) v = f.Z(i - 1, 1) + W(i, 1);
            else {
                const long long U = f.Z(i, j - 1) - f.Z(i - 1, j - 1);
                const long long V = f.Z(i - 1, j) - f.Z(i - 1, j - 1);
                const long long Xp = cp.choose(qhyp_table(U, ExtInt::inf(), V, qp));
                v = W(i, j) + f.Z(i - 1, j) + f.Z(i, j - 1) - f.Z(i - 1, j - 1) - Xp;
            }
            f.z[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = v;
        }
    return f;
}

/// Stationary boundary on N^2: w_{0,0} = 0, w_{i,0} ~ qGeom(alpha),
/// w_{0,j} ~ qGeom(beta), w_{i,j} ~ qGeom(alpha beta); every (i,j) with
/// i, j >= 1 uses the bulk recursion.
inline PolymerField stationary_polymer(long long N, long long M, double alpha, double beta,
                                       const QParams& qp, RngStream& rng) {
    if (!(alpha > 0 && alpha < 1 && beta > 0 && beta < 1 && alpha * beta < 1))
        throw DomainError("stationary_polymer: invalid (alpha, beta)");
    const QGeomSampler ga(alpha, qp), gb(beta, qp), gab(alpha * beta, qp);
    SamplingProvider cp(rng);
    PolymerField f;
    f.includes_origin = true;
    f.z.assign(static_cast<std::size_t>(N + 1),
               std::vector<long long>(static_cast<std::size_t>(M + 1), 0));
    for (long long i = 1; i <= N; ++i) f.z[i][0] = f.z[i - 1][0] + ga.draw(rng);
    for (long long j = 1; j <= M; ++j) f.z[0][j] = f.z[0][j - 1] + gb.draw(rng);
    for (long long i = 1; i <= N; ++i)
        for (long long j = 1; j <= M; ++j) {
            const long long U = f.z[i][j - 1] - f.z[i - 1][j - 1];
            const long long V = f.z[i - 1][j] - f.z[i - 1][j - 1];
            const long long Xp = cp.choose(qhyp_table(U, ExtInt::inf(), V, qp));
            f.z[i][j] = gab.draw(rng) + f.z[i - 1][j] + f.z[i][j - 1] - f.z[i - 1][j - 1] - Xp;
        }
    return f;
}

struct LlnRow {
    long long N;
    double ratio;  // Z(floor(Nx), floor(Ny)) / N
};

struct LlnTable {
    std::vector<LlnRow> rows;
    double limit;  // x gamma(alpha) + y gamma(beta)
};

inline LlnTable lln_experiment(double x, double y, const std::vector<long long>& n_list,
                               double alpha, double beta, const QParams& qp, RngStream& rng) {
    if (x < 0 || y < 0) throw DomainError("lln_experiment: x, y must be >= 0");
    LlnTable tab;
    tab.limit = x * gamma_rate(alpha, qp.q) + y * gamma_rate(beta, qp.q);
    for (long long N : n_list) {
        const long long l = static_cast<long long>(N * x), j = static_cast<long long>(N * y);
        const PolymerField f = stationary_polymer(l, j, alpha, beta, qp, rng);
        tab.rows.push_back(LlnRow{N, static_cast<double>(f.z[static_cast<std::size_t>(l)]
                                                            [static_cast<std::size_t>(j)]) /
                                         static_cast<double>(N)});
    }
    return tab;
}

// ---------------------------------------------------------------- q-pushTASEP

/// Stationary geometric q-pushTASEP: xi_0(0) = 0 and initial gaps
/// xi_m(0) - xi_{m-1}(0) - 1 ~ qGeom(beta). Corresponds to the stationary
/// polymer through xi_m(n) = Z(n, m) + m.
struct PushTasepState {
    std::vector<long long> xi;  // xi[m] = position of particle m
    long long time = 0;

    bool ordered() const {
        for (std::size_t m = 1; m < xi.size(); ++m)
            if (xi[m] < xi[m - 1]) return false;
        return true;
    }
};

inline PushTasepState pushtasep_init(long long particles, double beta, const QParams& qp,
                                     RngStream& rng) {
    const QGeomSampler gb(beta, qp);
    PushTasepState st;
    st.xi.push_back(0);
    for (long long m = 1; m < particles; ++m) st.xi.push_back(st.xi.back() + 1 + gb.draw(rng));
    return st;
}

/// One time step. Particle 0 jumps by qGeom(alpha); particle m jumps by
/// qGeom(alpha beta) + Y where Y = U - X', X' ~ qHyp(U, inf, V) with
/// U = the jump of particle m-1 and V = the gap xi_m - xi_{m-1} - 1.
inline void pushtasep_evolve(PushTasepState& st, double alpha, double beta, const QParams& qp,
                             RngStream& rng) {
    const QGeomSampler ga(alpha, qp), gab(alpha * beta, qp);
    SamplingProvider cp(rng);
    ++st.time;
    long long prev_jump = ga.draw(rng);
    long long prev_old = st.xi[0];
    st.xi[0] += prev_jump;
    for (std::size_t m = 1; m < st.xi.size(); ++m) {
        const long long U = prev_jump;
        const long long V = st.xi[m] - prev_old - 1;
        const long long Xp = cp.choose(qhyp_table(U, ExtInt::inf(), V, qp));
        const long long jump = gab.draw(rng) + (U - Xp);
        prev_old = st.xi[m];
        st.xi[m] += jump;
        prev_jump = jump;
        if (st.xi[m] < st.xi[m - 1]) throw std::logic_error("pushtasep_evolve: ordering violated");
    }
}

}  // namespace qp
