#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qp/qkernel.hpp"
#include "qp/rng.hpp"

// Young diagrams, Gelfand-Tsetlin patterns, the tableau <-> GT correspondence,
// Lambda-coordinates on a diagram, outer corners and growth sequences.

namespace qp {

using Cell = std::pair<long long, long long>;  // (row i, column j), 1-based

/// Young diagram as a weakly decreasing row-length sequence (trailing zeros
/// stripped).
struct YoungDiagram {
    std::vector<long long> rows;

    YoungDiagram() = default;
    explicit YoungDiagram(std::vector<long long> r) : rows(std::move(r)) {
        while (!rows.empty() && rows.back() == 0) rows.pop_back();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i] < 0) throw DomainError("YoungDiagram: negative row");
            if (i + 1 < rows.size() && rows[i] < rows[i + 1])
                throw DomainError("YoungDiagram: rows not weakly decreasing");
        }
    }

    long long row(long long i) const {  // lambda_i with zero padding, i >= 1
        if (i < 1) throw DomainError("YoungDiagram: row index must be >= 1");
        return i <= static_cast<long long>(rows.size()) ? rows[static_cast<std::size_t>(i - 1)]
                                                        : 0;
    }
    long long size() const {
        long long s = 0;
        for (long long r : rows) s += r;
        return s;
    }
    bool contains(Cell c) const { return c.first >= 1 && c.second >= 1 && c.second <= row(c.first); }
    std::vector<Cell> cells() const {
        std::vector<Cell> out;
        for (long long i = 1; i <= static_cast<long long>(rows.size()); ++i)
            for (long long j = 1; j <= row(i); ++j) out.emplace_back(i, j);
        return out;
    }
    friend bool operator==(const YoungDiagram& a, const YoungDiagram& b) {
        return a.rows == b.rows;
    }
    friend bool operator<(const YoungDiagram& a, const YoungDiagram& b) {
        return a.rows < b.rows;
    }
    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < rows.size(); ++i)
            s += (i ? "," : "") + std::to_string(rows[i]);
        return s + ")";
    }
};

/// a < b in the interlacing order: b_1 >= a_1 >= b_2 >= a_2 >= ...
inline bool interlaces(const YoungDiagram& a, const YoungDiagram& b) {
    const long long n = std::max(a.rows.size(), b.rows.size());
    for (long long i = 1; i <= n; ++i)
        if (!(b.row(i) >= a.row(i) && a.row(i) >= b.row(i + 1))) return false;
    return true;
}

/// Triangular array lambda^k_j, 1 <= j <= k <= m. levels[k-1][j-1] = lambda^k_j.
struct GTPattern {
    std::vector<std::vector<long long>> levels;

    GTPattern() = default;
    /// All-zero pattern of depth m.
    explicit GTPattern(long long m) {
        levels.resize(static_cast<std::size_t>(m));
        for (long long k = 1; k <= m; ++k)
            levels[static_cast<std::size_t>(k - 1)].assign(static_cast<std::size_t>(k), 0);
    }
    explicit GTPattern(std::vector<std::vector<long long>> lv) : levels(std::move(lv)) {
        for (std::size_t k = 0; k < levels.size(); ++k)
            if (levels[k].size() != k + 1) throw DomainError("GTPattern: level k must have k rows");
    }

    long long depth() const { return static_cast<long long>(levels.size()); }
    long long& at(long long k, long long j) {
        return levels[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(j - 1)];
    }
    long long at(long long k, long long j) const {
        return levels[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(j - 1)];
    }
    YoungDiagram level(long long k) const {
        return YoungDiagram(levels[static_cast<std::size_t>(k - 1)]);
    }
    /// Interlacing lambda^{k+1}_{j+1} <= lambda^k_j <= lambda^{k+1}_j and
    /// nonnegativity.
    bool valid() const {
        for (long long k = 1; k <= depth(); ++k) {
            for (long long j = 1; j <= k; ++j)
                if (at(k, j) < 0 || (j < k && at(k, j) < at(k, j + 1))) return false;
            if (k < depth())
                for (long long j = 1; j <= k; ++j)
                    if (!(at(k + 1, j + 1) <= at(k, j) && at(k, j) <= at(k + 1, j))) return false;
        }
        return true;
    }
    YoungDiagram shape() const {
        return depth() == 0 ? YoungDiagram() : level(depth());
    }
    friend bool operator==(const GTPattern& a, const GTPattern& b) {
        return a.levels == b.levels;
    }
    std::string str() const {
        std::string s = "[";
        for (long long k = 1; k <= depth(); ++k) {
            if (k > 1) s += ";";
            for (long long j = 1; j <= k; ++j) s += (j > 1 ? "," : "") + std::to_string(at(k, j));
        }
        return s + "]";
    }
};

/// Semistandard tableau as rows of entries in 1..m, rows weakly increasing,
/// columns strictly increasing.
struct Tableau {
    std::vector<std::vector<long long>> rows;

    bool semistandard() const {
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i + 1 < rows.size() && rows[i].size() < rows[i + 1].size()) return false;
            for (std::size_t j = 0; j < rows[i].size(); ++j) {
                if (rows[i][j] < 1) return false;
                if (j + 1 < rows[i].size() && rows[i][j] > rows[i][j + 1]) return false;
                if (i + 1 < rows.size() && j < rows[i + 1].size() &&
                    rows[i][j] >= rows[i + 1][j])
                    return false;
            }
        }
        return true;
    }
};

/// lambda^k_j = number of entries in tableau row j that are <= k.
inline GTPattern gt_from_tableau(const Tableau& t, long long m) {
    if (!t.semistandard()) throw DomainError("gt_from_tableau: tableau not semistandard");
    for (const auto& r : t.rows)
        for (long long e : r)
            if (e > m) throw DomainError("gt_from_tableau: entry exceeds depth m");
    GTPattern p(m);
    for (long long k = 1; k <= m; ++k)
        for (long long j = 1; j <= k; ++j) {
            long long c = 0;
            if (j <= static_cast<long long>(t.rows.size()))
                for (long long e : t.rows[static_cast<std::size_t>(j - 1)]) c += (e <= k);
            p.at(k, j) = c;
        }
    return p;
}

/// Inverse: row j carries (lambda^k_j - lambda^{k-1}_j) copies of k.
inline Tableau tableau_from_gt(const GTPattern& p) {
    if (!p.valid()) throw DomainError("tableau_from_gt: invalid GT pattern");
    Tableau t;
    const long long m = p.depth();
    for (long long j = 1; j <= m; ++j) {
        std::vector<long long> row;
        for (long long k = j; k <= m; ++k) {
            const long long prev = (k > j) ? p.at(k - 1, j) : 0;
            for (long long c = 0; c < p.at(k, j) - prev; ++c) row.push_back(k);
        }
        if (!row.empty()) t.rows.push_back(std::move(row));
    }
    return t;
}

/// ty_1 = lambda^1_1; ty_i = sum(lambda^i) - sum(lambda^{i-1}).
inline std::vector<long long> type_of(const GTPattern& p) {
    std::vector<long long> ty;
    long long prev = 0;
    for (long long k = 1; k <= p.depth(); ++k) {
        long long s = 0;
        for (long long j = 1; j <= k; ++j) s += p.at(k, j);
        ty.push_back(s - prev);
        prev = s;
    }
    return ty;
}

/// Outer corners (n, m): lambda_n = m and lambda_{n+1} < m, top to bottom.
inline std::vector<Cell> outer_corners(const YoungDiagram& d) {
    std::vector<Cell> out;
    for (long long n = 1; n <= static_cast<long long>(d.rows.size()); ++n)
        if (d.row(n) > d.row(n + 1)) out.emplace_back(n, d.row(n));
    return out;
}

/// Boundary S(Lambda): cells (i,j) in Lambda with (i+1,j+1) not in Lambda.
inline std::vector<Cell> boundary(const YoungDiagram& d) {
    std::vector<Cell> out;
    for (const Cell& c : d.cells())
        if (!d.contains({c.first + 1, c.second + 1})) out.push_back(c);
    return out;
}

/// (i, j, k): anchor (i,j) in S(Lambda) with the cell sitting k-1 steps up the
/// diagonal from it.
struct LambdaCoordinate {
    long long i, j, k;
    friend bool operator==(LambdaCoordinate a, LambdaCoordinate b) {
        return a.i == b.i && a.j == b.j && a.k == b.k;
    }
};

inline LambdaCoordinate lambda_coordinate(const YoungDiagram& d, Cell c) {
    if (!d.contains(c)) throw DomainError("lambda_coordinate: cell outside diagram");
    long long k = 1;
    while (d.contains({c.first + k, c.second + k})) ++k;
    return LambdaCoordinate{c.first + k - 1, c.second + k - 1, k};
}

inline Cell cell_from_lambda_coordinate(const YoungDiagram& d, LambdaCoordinate lc) {
    const Cell c{lc.i - lc.k + 1, lc.j - lc.k + 1};
    if (!d.contains(c) || !(lambda_coordinate(d, c) == lc))
        throw DomainError("cell_from_lambda_coordinate: invalid coordinate");
    return c;
}

/// Growing chain of diagrams, empty -> Lambda, one cell per step.
struct GrowthSequence {
    std::vector<YoungDiagram> diagrams;

    bool valid() const {
        if (diagrams.empty() || !diagrams.front().rows.empty()) return false;
        for (std::size_t i = 1; i < diagrams.size(); ++i) {
            if (diagrams[i].size() != diagrams[i - 1].size() + 1) return false;
            for (long long r = 1; r <= static_cast<long long>(diagrams[i].rows.size()); ++r)
                if (diagrams[i].row(r) < diagrams[i - 1].row(r)) return false;
        }
        return true;
    }
    /// The cell added at step ell >= 1.
    Cell added_cell(std::size_t ell) const {
        const YoungDiagram &a = diagrams[ell - 1], &b = diagrams[ell];
        for (long long r = 1; r <= static_cast<long long>(b.rows.size()); ++r)
            if (b.row(r) != a.row(r)) return {r, b.row(r)};
        throw DomainError("GrowthSequence: no added cell");
    }
};

enum class GrowthStrategy { RowByRow, ColumnByColumn, Diagonal, Random };

/// Cells of `target` addable to the current partial shape `cur` (subset of
/// target) so that it stays a Young diagram.
inline std::vector<Cell> addable_cells(const YoungDiagram& target, const YoungDiagram& cur) {
    std::vector<Cell> out;
    for (long long i = 1; i <= static_cast<long long>(target.rows.size()); ++i) {
        const long long j = cur.row(i) + 1;
        if (j <= target.row(i) && (i == 1 || cur.row(i - 1) >= j)) out.emplace_back(i, j);
    }
    return out;
}

inline YoungDiagram with_added_cell(const YoungDiagram& d, Cell c) {
    std::vector<long long> rows = d.rows;
    if (c.first > static_cast<long long>(rows.size())) rows.resize(c.first, 0);
    ++rows[static_cast<std::size_t>(c.first - 1)];
    return YoungDiagram(rows);
}

inline GrowthSequence growth_sequence(const YoungDiagram& target, GrowthStrategy strategy,
                                      RngStream* rng = nullptr) {
    std::vector<Cell> order = target.cells();  // row-by-row by construction
    switch (strategy) {
        case GrowthStrategy::RowByRow:
            break;
        case GrowthStrategy::ColumnByColumn:
            std::stable_sort(order.begin(), order.end(), [](Cell a, Cell b) {
                return std::pair(a.second, a.first) < std::pair(b.second, b.first);
            });
            break;
        case GrowthStrategy::Diagonal:
            std::stable_sort(order.begin(), order.end(), [](Cell a, Cell b) {
                return std::pair(a.first + a.second, a.first) <
                       std::pair(b.first + b.second, b.first);
            });
            break;
        case GrowthStrategy::Random: {
            if (rng == nullptr) throw DomainError("growth_sequence: Random needs an RngStream");
            GrowthSequence gs;
            YoungDiagram cur;
            gs.diagrams.push_back(cur);
            while (!(cur == target)) {
                const std::vector<Cell> opts = addable_cells(target, cur);
                const std::size_t pick =
                    static_cast<std::size_t>(rng->next_double() * static_cast<double>(opts.size()));
                cur = with_added_cell(cur, opts[std::min(pick, opts.size() - 1)]);
                gs.diagrams.push_back(cur);
            }
            return gs;
        }
    }
    GrowthSequence gs;
    YoungDiagram cur;
    gs.diagrams.push_back(cur);
    for (const Cell& c : order) {
        cur = with_added_cell(cur, c);
        gs.diagrams.push_back(cur);
    }
    return gs;
}

/// All growth sequences of `target` (= standard Young tableaux of that shape).
/// Intended for small diagrams only.
inline std::vector<GrowthSequence> all_growth_sequences(const YoungDiagram& target) {
    std::vector<GrowthSequence> out;
    GrowthSequence partial;
    partial.diagrams.push_back(YoungDiagram());
    const auto rec = [&](auto&& self) -> void {
        const YoungDiagram cur = partial.diagrams.back();  // copy: push_back may reallocate
        if (cur == target) {
            out.push_back(partial);
            return;
        }
        for (const Cell& c : addable_cells(target, cur)) {
            partial.diagrams.push_back(with_added_cell(cur, c));
            self(self);
            partial.diagrams.pop_back();
        }
    };
    rec(rec);
    return out;
}

}  // namespace qp
