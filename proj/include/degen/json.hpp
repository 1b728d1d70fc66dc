#ifndef DEGEN_JSON_HPP
#define DEGEN_JSON_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "degen/hyperbolic.hpp"
#include "degen/identity_report.hpp"
#include "degen/padic.hpp"
#include "degen/power_series.hpp"
#include "degen/special_numbers.hpp"

namespace degen {

using json = nlohmann::json;

/// Ordered array of coefficient strings c_0, c_1, ...
template <CoefficientRing R>
json series_json(const Series<R>& s) {
    json arr = json::array();
    for (const auto& c : s.coefficients()) arr.push_back(ring_traits<R>::render(c));
    return arr;
}

/// { "kind", "max_index", "values": [...] }
inline json table_json(const NumberTable& t) {
    return json{{"kind", to_string(t.kind)}, {"max_index", t.max_index}, {"values", t.rendered()}};
}

/// { "kind", "x", "order", "egf_coefficients": [...] }; x is null for the half-argument kinds.
inline json hyperbolic_json(const HyperbolicSeries& h) {
    json coeffs = json::array();
    for (const auto& c : h.egf()) coeffs.push_back(to_string(c));
    return json{{"kind", to_string(h.kind)},
                {"x", h.x ? json(to_string(*h.x)) : json(nullptr)},
                {"order", h.order},
                {"egf_coefficients", std::move(coeffs)}};
}

inline json report_json(const IdentityReport& r) {
    json j{{"name", r.name}, {"order", r.order}, {"passed", r.passed}};
    j["first_failure_index"] = r.first_failure_index ? json(*r.first_failure_index) : json(nullptr);
    j["lhs_coeff"] = r.lhs_coeff ? json(to_string(*r.lhs_coeff)) : json(nullptr);
    j["rhs_coeff"] = r.rhs_coeff ? json(to_string(*r.rhs_coeff)) : json(nullptr);
    return j;
}

inline json reports_json(const std::vector<IdentityReport>& reports) {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(report_json(r));
    return arr;
}

/// { "p", "lambda", "n", "measure", "integrand", "exact", "rows": [{ "N", "sum", "distance" }] }.
/// lambda and n are null for monomial integrands.
inline json convergence_json(const ConvergenceReport& r) {
    const bool falling = r.integrand.basis == IntegrandSpec::Basis::falling;
    json rows = json::array();
    for (const auto& row : r.rows)
        rows.push_back(json{{"N", row.level},
                            {"sum", to_string(row.sum)},
                            {"distance", distance_string(row.distance_valuation, r.prime)}});
    return json{{"p", r.prime},
                {"lambda", falling ? json(to_string(r.integrand.lambda)) : json(nullptr)},
                {"n", falling ? json(r.integrand.n) : json(nullptr)},
                {"measure", to_string(r.measure)},
                {"integrand", to_string(r.integrand)},
                {"exact", to_string(r.exact)},
                {"rows", std::move(rows)}};
}

} // namespace degen

#endif // DEGEN_JSON_HPP
