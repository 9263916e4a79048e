#pragma once

#include <json.hpp>

#include "expansion.hpp"
#include "legendrian.hpp"
#include "matrix.hpp"
#include "partition.hpp"
#include "positivity.hpp"
#include "schur.hpp"

namespace schubert::json {

using Json = nlohmann::ordered_json;

inline Json parts(const detail::PartsBase& p) { return Json(p.parts()); }

inline Json coeff(const Integer& v) { return v.get_str(); }

inline Json expansion(const SchurExpansion& x) {
    Json out = Json::array();
    for (const auto& [k, v] : x.coefficients()) out.push_back({{"partition", parts(k)}, {"coeff", coeff(v)}});
    return out;
}

inline Json expansion(const QExpansion& x) {
    Json out = Json::array();
    for (const auto& [k, v] : x.coefficients()) out.push_back({{"strict_partition", parts(k)}, {"coeff", coeff(v)}});
    return out;
}

inline Json expansion(const LegendrianClass& x) {
    Json out = Json::array();
    for (const auto& [k, v] : x.coefficients())
        out.push_back({{"strict_partition", parts(k.mu)}, {"a", k.a}, {"b", k.b}, {"coeff", coeff(v)}});
    return out;
}

inline Json expansion(const BiSchurExpansion& x) {
    Json out = Json::array();
    for (const auto& [k, v] : x)
        out.push_back({{"alpha", parts(k.first)}, {"beta", parts(k.second)}, {"coeff", coeff(v)}});
    return out;
}

template <class Report>
Json report(const Report& r) {
    Json out = {{"name", r.name}, {"verdict", to_string(r.verdict)}, {"expansion", expansion(r.expansion)}};
    if (r.verdict == Verdict::NotNonnegative) {
        Json ws = Json::array();
        for (const auto& item : expansion(r.expansion))
            if (item["coeff"].template get<std::string>().front() == '-') ws.push_back(item);
        out["witnesses"] = ws;
    }
    return out;
}

inline Json matrix(const IntegerMatrix& m) {
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(coeff(m(i, j)));
        out.push_back(row);
    }
    return out;
}

} // namespace schubert::json
