#pragma once

#include <cstdio>
#include <string>

#include <json.hpp>

#include "qp/qrsk.hpp"
#include "qp/tableaux.hpp"

// JSON/CSV serialization helpers shared by the CLI and the tests.

namespace qp {

using json = nlohmann::json;

/// Decimal with 17 significant digits (round-trip exact for doubles).
inline std::string fmt17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

inline json to_json(const YoungDiagram& d) { return json(d.rows); }

inline json to_json(const GTPattern& p) {
    json levels = json::array();
    for (const auto& lv : p.levels) levels.push_back(lv);
    return levels;
}

inline json to_json(const QrskOutput& out) {
    return json{{"P", to_json(out.p_pattern)}, {"Q", to_json(out.q_pattern)}};
}

inline Matrix matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw DomainError("matrix_from_json: expected 2d array");
    Matrix A;
    for (const auto& row : j) {
        if (!row.is_array() || row.empty() || (!A.empty() && row.size() != A.front().size()))
            throw DomainError("matrix_from_json: rows must be equal-length arrays");
        std::vector<long long> r;
        for (const auto& v : row) {
            if (!v.is_number_integer() || v.get<long long>() < 0)
                throw DomainError("matrix_from_json: entries must be nonnegative integers");
            r.push_back(v.get<long long>());
        }
        A.push_back(std::move(r));
    }
    return A;
}

}  // namespace qp
