#ifndef DEGEN_HYPERBOLIC_HPP
#define DEGEN_HYPERBOLIC_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "degen/identity_report.hpp"
#include "degen/lambda_poly.hpp"
#include "degen/power_series.hpp"
#include "degen/rational.hpp"
#include "degen/special_numbers.hpp"

namespace degen {

enum class HyperbolicKind { cosh, sinh, tanh_half, coth_half_scaled };

inline std::string to_string(HyperbolicKind k) {
    switch (k) {
    case HyperbolicKind::cosh: return "cosh";
    case HyperbolicKind::sinh: return "sinh";
    case HyperbolicKind::tanh_half: return "tanh-half";
    case HyperbolicKind::coth_half_scaled: return "coth-half-scaled";
    }
    return "?";
}

inline HyperbolicKind parse_hyperbolic_kind(std::string_view s) {
    for (auto k : {HyperbolicKind::cosh, HyperbolicKind::sinh, HyperbolicKind::tanh_half,
                   HyperbolicKind::coth_half_scaled})
        if (to_string(k) == s) return k;
    throw std::invalid_argument("unknown hyperbolic function '" + std::string(s) + "'");
}

/// A degenerate hyperbolic function as a series in a over Q[lambda].
/// The half-argument kinds fix x = 1/2 and carry no x. coth_half_scaled
/// stores a * coth_lambda(1/2 : a), which is regular at a = 0.
struct HyperbolicSeries {
    HyperbolicKind kind;
    std::optional<Rational> x;
    std::size_t order;
    Series<LambdaPoly> series;

    std::vector<LambdaPoly> egf() const { return egf_coefficients(series); }
};

namespace detail {

// ((x)_{m,lambda} +/- (-1)^m (x)_{m,-lambda}) / 2 for m = 0..order
inline Series<LambdaPoly> parity_part(const Rational& x, std::size_t order, bool even_part) {
    std::vector<LambdaPoly> egf;
    egf.reserve(order + 1);
    const Rational half(1, 2);
    LambdaPoly ff(1);
    for (std::size_t m = 0; m <= order; ++m) {
        LambdaPoly mirrored = lp_reflect(ff);
        if (m % 2 == 1) mirrored = -mirrored;
        egf.push_back((even_part ? ff + mirrored : ff - mirrored) * half);
        ff *= LambdaPoly({x, Rational(-static_cast<long>(m))});
    }
    return Series<LambdaPoly>::from_egf(egf);
}

} // namespace detail

/// cosh_lambda(x:a) = (e_lambda^x(a) + e_lambda^{-x}(a)) / 2.
inline HyperbolicSeries cosh_series(const Rational& x, std::size_t order) {
    return {HyperbolicKind::cosh, x, order, detail::parity_part(x, order, true)};
}

/// sinh_lambda(x:a) = (e_lambda^x(a) - e_lambda^{-x}(a)) / 2.
inline HyperbolicSeries sinh_series(const Rational& x, std::size_t order) {
    return {HyperbolicKind::sinh, x, order, detail::parity_part(x, order, false)};
}

/// tanh_lambda(1/2 : a) = sinh / cosh; the divisor has constant term 1.
inline HyperbolicSeries tanh_half_series(std::size_t order) {
    const Rational half(1, 2);
    auto q = ps_div(sinh_series(half, order).series, cosh_series(half, order).series);
    return {HyperbolicKind::tanh_half, std::nullopt, order, std::move(q)};
}

/// a * coth_lambda(1/2 : a) = cosh(1/2:a) / (sinh(1/2:a) / a).
inline HyperbolicSeries coth_half_scaled_series(std::size_t order) {
    const Rational half(1, 2);
    auto sinh_over_a = ps_divide_by_var(sinh_series(half, order + 1).series);
    if (sinh_over_a[0] == LambdaPoly())
        throw std::domain_error("sinh has a vanishing linear coefficient; a*coth is not regular");
    auto q = ps_div(cosh_series(half, order).series, sinh_over_a);
    return {HyperbolicKind::coth_half_scaled, std::nullopt, order, std::move(q)};
}

inline HyperbolicSeries hyperbolic_series(HyperbolicKind kind, const Rational& x, std::size_t order) {
    switch (kind) {
    case HyperbolicKind::cosh: return cosh_series(x, order);
    case HyperbolicKind::sinh: return sinh_series(x, order);
    case HyperbolicKind::tanh_half: return tanh_half_series(order);
    case HyperbolicKind::coth_half_scaled: return coth_half_scaled_series(order);
    }
    throw std::invalid_argument("unknown hyperbolic kind");
}

namespace detail {

inline std::string tagged(std::string_view name, const Rational& x) {
    return std::string(name) + "[x=" + to_string(x) + "]";
}

inline std::string tagged(std::string_view name, const Rational& x, const Rational& y) {
    return std::string(name) + "[x=" + to_string(x) + ",y=" + to_string(y) + "]";
}

} // namespace detail

/// cosh(2x) = 2 cosh(x)^2 - 1 = 1 + 2 sinh(x)^2, and sinh(2x) = 2 sinh(x) cosh(x).
inline std::pair<IdentityReport, IdentityReport> verify_double_angle(const Rational& x, std::size_t order) {
    auto c = cosh_series(x, order).series;
    auto s = sinh_series(x, order).series;
    auto c2 = cosh_series(2 * x, order).series;
    auto s2 = sinh_series(2 * x, order).series;
    auto one = Series<LambdaPoly>::one(order);
    const LambdaPoly two(2);

    auto from_cosh = ps_sub(ps_scale(ps_mul(c, c), two), one);
    auto from_sinh = ps_add(one, ps_scale(ps_mul(s, s), two));
    auto cosh_report = merge_reports(detail::tagged("double_angle_cosh", x), compare_series("", c2, from_cosh, order),
                                     compare_series("", c2, from_sinh, order));
    auto sinh_report =
        compare_series(detail::tagged("double_angle_sinh", x), s2, ps_scale(ps_mul(s, c), two), order);
    return {std::move(cosh_report), std::move(sinh_report)};
}

/// cosh(x+y) = cosh x cosh y + sinh x sinh y, sinh(x+y) = sinh x cosh y + cosh x sinh y.
inline std::pair<IdentityReport, IdentityReport> verify_addition(const Rational& x, const Rational& y,
                                                                 std::size_t order) {
    auto cx = cosh_series(x, order).series, sx = sinh_series(x, order).series;
    auto cy = cosh_series(y, order).series, sy = sinh_series(y, order).series;
    auto cosh_sum = cosh_series(x + y, order).series;
    auto sinh_sum = sinh_series(x + y, order).series;
    return {compare_series(detail::tagged("addition_cosh", x, y), cosh_sum, ps_add(ps_mul(cx, cy), ps_mul(sx, sy)),
                           order),
            compare_series(detail::tagged("addition_sinh", x, y), sinh_sum, ps_add(ps_mul(sx, cy), ps_mul(cx, sy)),
                           order)};
}

} // namespace degen

#endif // DEGEN_HYPERBOLIC_HPP
