#ifndef DEGEN_IDENTITY_REPORT_HPP
#define DEGEN_IDENTITY_REPORT_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "degen/lambda_poly.hpp"
#include "degen/power_series.hpp"

namespace degen {

/// Outcome of one exact identity check. passed holds iff first_failure_index
/// is empty; on failure the two sides at that index are kept. For series
/// identities the index is the power of the series variable and the sides are
/// the EGF (n!-weighted) coefficients.
struct IdentityReport {
    std::string name;
    std::size_t order = 0;
    bool passed = true;
    std::optional<std::size_t> first_failure_index;
    std::optional<LambdaPoly> lhs_coeff;
    std::optional<LambdaPoly> rhs_coeff;

    static IdentityReport pass(std::string name, std::size_t order) {
        return IdentityReport{std::move(name), order, true, std::nullopt, std::nullopt, std::nullopt};
    }
    static IdentityReport fail(std::string name, std::size_t order, std::size_t index, LambdaPoly lhs,
                               LambdaPoly rhs) {
        return IdentityReport{std::move(name), order, false, index, std::move(lhs), std::move(rhs)};
    }
};

/// Coefficient-wise comparison of two series up to `order`.
inline IdentityReport compare_series(std::string name, const Series<LambdaPoly>& lhs, const Series<LambdaPoly>& rhs,
                                     std::size_t order) {
    auto m = ps_eq(lhs, rhs, order);
    if (m) return IdentityReport::pass(std::move(name), order);
    std::size_t n = *m.first_mismatch;
    return IdentityReport::fail(std::move(name), order, n, ps_coeff_egf(lhs, n), ps_coeff_egf(rhs, n));
}

/// Entry-wise comparison of two equally long sequences, index offset by `first`.
inline IdentityReport compare_values(std::string name, const std::vector<LambdaPoly>& lhs,
                                     const std::vector<LambdaPoly>& rhs, std::size_t first, std::size_t order) {
    for (std::size_t i = 0; i < lhs.size() && i < rhs.size(); ++i)
        if (!(lhs[i] == rhs[i])) return IdentityReport::fail(std::move(name), order, first + i, lhs[i], rhs[i]);
    return IdentityReport::pass(std::move(name), order);
}

/// Combines two checks of one named identity; the earliest failure wins.
inline IdentityReport merge_reports(std::string name, IdentityReport a, IdentityReport b) {
    IdentityReport out = a.passed ? std::move(b) : (!b.passed && *b.first_failure_index < *a.first_failure_index)
                                                       ? std::move(b)
                                                       : std::move(a);
    out.name = std::move(name);
    return out;
}

} // namespace degen

#endif // DEGEN_IDENTITY_REPORT_HPP
