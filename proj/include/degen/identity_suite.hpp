#ifndef DEGEN_IDENTITY_SUITE_HPP
#define DEGEN_IDENTITY_SUITE_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "degen/hyperbolic.hpp"
#include "degen/identity_report.hpp"
#include "degen/lambda_poly.hpp"
#include "degen/power_series.hpp"
#include "degen/rational.hpp"
#include "degen/special_numbers.hpp"

namespace degen {

/// Number tables shared by all theorem checks. Built once per order; tests
/// may corrupt entries to exercise failure reporting.
struct SuiteTables {
    std::size_t order;
    NumberTable beta;
    NumberTable euler;
    NumberTable cauchy;

    static SuiteTables build(std::size_t order) {
        return {order, degenerate_bernoulli(order), degenerate_euler(order), cauchy_numbers(order)};
    }
};

namespace detail {

// (v_n + sign (-1)^n v_n(-lambda)) / 2 for a degenerate table
inline std::vector<LambdaPoly> reflected_part(const NumberTable& t, std::size_t order, bool even_part) {
    std::vector<LambdaPoly> out;
    out.reserve(order + 1);
    const Rational half(1, 2);
    for (std::size_t n = 0; n <= order; ++n) {
        LambdaPoly mirrored = lp_reflect(t.poly(n));
        if (n % 2 == 1) mirrored = -mirrored;
        out.push_back((even_part ? t.poly(n) + mirrored : t.poly(n) - mirrored) * half);
    }
    return out;
}

// lambda a / log(1 + lambda a) = sum C_l lambda^l a^l / l!
inline Series<LambdaPoly> cauchy_multiplier(const NumberTable& cauchy, std::size_t order) {
    std::vector<Rational> egf;
    for (std::size_t l = 0; l <= order; ++l) egf.push_back(cauchy.rational(l));
    return ps_scale_var(lift(Series<Rational>::from_egf(egf)), LambdaPoly::lambda());
}

inline Series<LambdaPoly> half_coth_scaled(std::size_t order) {
    return ps_scale(coth_half_scaled_series(order).series, LambdaPoly(Rational(1, 2)));
}

} // namespace detail

/// Both integral relations for the Volkenborn integrals of cosh and sinh,
/// weighted by lambda a / log(1 + lambda a): the cosh side equals
/// (a/2) coth_lambda(1/2 : a), the sinh side equals -a/2.
inline std::pair<IdentityReport, IdentityReport> check_thm4(const SuiteTables& t) {
    const std::size_t k = t.order;
    auto multiplier = detail::cauchy_multiplier(t.cauchy, k);
    auto cosh_integral = Series<LambdaPoly>::from_egf(detail::reflected_part(t.beta, k, true));
    auto sinh_integral = Series<LambdaPoly>::from_egf(detail::reflected_part(t.beta, k, false));
    return {compare_series("thm4_cosh_integral", ps_mul(multiplier, cosh_integral), detail::half_coth_scaled(k), k),
            compare_series("thm4_sinh_integral", ps_mul(multiplier, sinh_integral),
                           Series<LambdaPoly>::monomial(LambdaPoly(Rational(-1, 2)), 1, k), k)};
}

inline std::pair<IdentityReport, IdentityReport> check_thm4(std::size_t order) {
    return check_thm4(SuiteTables::build(order));
}

/// beta_{n,lambda} - (-1)^n beta_{n,-lambda} = -(n-1)! (-lambda)^{n-1}, n = 1..n_max.
inline IdentityReport check_thm5_reflection(const NumberTable& beta, std::size_t n_max) {
    std::vector<LambdaPoly> lhs, rhs;
    for (std::size_t n = 1; n <= n_max; ++n) {
        LambdaPoly mirrored = lp_reflect(beta.poly(n));
        lhs.push_back(n % 2 == 0 ? beta.poly(n) - mirrored : beta.poly(n) + mirrored);
        Rational c(factorial(static_cast<unsigned>(n - 1)));
        rhs.push_back(LambdaPoly::monomial(n % 2 == 1 ? Rational(-c) : c, n - 1));
    }
    return compare_values("thm5_reflection", lhs, rhs, 1, n_max);
}

inline IdentityReport check_thm5_reflection(std::size_t n_max) {
    return check_thm5_reflection(degenerate_bernoulli(n_max), n_max);
}

/// (a/2) coth_lambda(1/2 : a) rebuilt as the binomial convolution of the even
/// beta part with C_l lambda^l, compared with the series-division route.
inline IdentityReport check_thm5_coth_expansion(const SuiteTables& t) {
    const std::size_t k = t.order;
    auto even = detail::reflected_part(t.beta, k, true);
    std::vector<LambdaPoly> r;
    r.reserve(k + 1);
    for (std::size_t n = 0; n <= k; ++n) {
        LambdaPoly acc;
        for (std::size_t m = 0; m <= n; ++m) {
            Rational w = Rational(binomial(unsigned(n), unsigned(m))) * t.cauchy.rational(n - m);
            acc += even[m] * LambdaPoly::monomial(w, n - m);
        }
        r.push_back(std::move(acc));
    }
    return compare_series("thm5_coth_expansion", Series<LambdaPoly>::from_egf(r), detail::half_coth_scaled(k), k);
}

inline IdentityReport check_thm5_coth_expansion(std::size_t order) {
    return check_thm5_coth_expansion(SuiteTables::build(order));
}

/// Fermionic integrals of cosh and sinh: the even Euler part sums to 1, and the
/// odd part equals both -tanh_lambda(1/2 : a) and sum_{n>=1} E_{n,lambda} a^n/n!.
inline std::pair<IdentityReport, IdentityReport> check_thm6_thm7(const SuiteTables& t) {
    const std::size_t k = t.order;
    auto even = Series<LambdaPoly>::from_egf(detail::reflected_part(t.euler, k, true));
    auto odd = Series<LambdaPoly>::from_egf(detail::reflected_part(t.euler, k, false));
    auto minus_tanh = ps_scale(tanh_half_series(k).series, LambdaPoly(-1));
    std::vector<LambdaPoly> tail;
    for (std::size_t n = 0; n <= k; ++n) tail.push_back(n == 0 ? LambdaPoly() : t.euler.poly(n));
    auto euler_tail = Series<LambdaPoly>::from_egf(tail);

    auto a = compare_series("thm6_cosh_fermionic", even, Series<LambdaPoly>::one(k), k);
    auto b = merge_reports("thm6_thm7_sinh_fermionic", compare_series("", odd, minus_tanh, k),
                           compare_series("", euler_tail, minus_tanh, k));
    return {std::move(a), std::move(b)};
}

inline std::pair<IdentityReport, IdentityReport> check_thm6_thm7(std::size_t order) {
    return check_thm6_thm7(SuiteTables::build(order));
}

/// (E_{n,lambda} + (-1)^n E_{n,-lambda})/2 is 1 at n = 0 and 0 after, and
/// E_{n,lambda} = (-1)^{n-1} E_{n,-lambda} for n >= 1.
inline std::pair<IdentityReport, IdentityReport> check_euler_structure(const NumberTable& euler, std::size_t n_max) {
    auto even = detail::reflected_part(euler, n_max, true);
    std::vector<LambdaPoly> expected(n_max + 1);
    expected[0] = LambdaPoly(1);
    std::vector<LambdaPoly> lhs, rhs;
    for (std::size_t n = 1; n <= n_max; ++n) {
        LambdaPoly mirrored = lp_reflect(euler.poly(n));
        lhs.push_back(euler.poly(n));
        rhs.push_back(n % 2 == 1 ? mirrored : -mirrored);
    }
    return {compare_values("euler_even_part", even, expected, 0, n_max),
            compare_values("euler_reflection", lhs, rhs, 1, n_max)};
}

inline std::pair<IdentityReport, IdentityReport> check_euler_structure(std::size_t n_max) {
    return check_euler_structure(degenerate_euler(n_max), n_max);
}

namespace detail {

// classical e^{x a} to order K over Q
inline Series<Rational> classical_exp(const Rational& x, std::size_t order) {
    std::vector<Rational> egf;
    Rational pw = 1;
    for (std::size_t m = 0; m <= order; ++m) {
        egf.push_back(pw);
        pw *= x;
    }
    return Series<Rational>::from_egf(egf);
}

inline std::vector<LambdaPoly> as_constants(const std::vector<Rational>& v) {
    return std::vector<LambdaPoly>(v.begin(), v.end());
}

inline std::vector<LambdaPoly> at_zero(const std::vector<LambdaPoly>& v) {
    std::vector<LambdaPoly> out;
    for (const auto& p : v) out.emplace_back(lp_eval(p, 0));
    return out;
}

} // namespace detail

/// lambda -> 0 reproduces B_n, E_n and the classical cosh, sinh, tanh(a/2),
/// a coth(a/2) Taylor coefficients. Classical values come from routes that
/// never touch lambda.
inline IdentityReport check_classical_limits(const SuiteTables& t, const std::vector<Rational>& xs = {1, Rational(1, 2)}) {
    const std::size_t k = t.order;
    const auto bern = std::get<std::vector<Rational>>(classical_numbers(NumberKind::bernoulli, k).values);
    const auto eul = std::get<std::vector<Rational>>(classical_numbers(NumberKind::euler, k).values);
    std::vector<LambdaPoly> beta, euler;
    for (std::size_t n = 0; n <= k; ++n) {
        beta.push_back(t.beta.poly(n));
        euler.push_back(t.euler.poly(n));
    }
    IdentityReport r = merge_reports("", compare_values("", detail::at_zero(beta), detail::as_constants(bern), 0, k),
                                     compare_values("", detail::at_zero(euler), detail::as_constants(eul), 0, k));

    for (const auto& x : xs) {
        auto ep = detail::classical_exp(x, k), em = detail::classical_exp(-x, k);
        const Rational half(1, 2);
        auto ccosh = ps_scale(ps_add(ep, em), half), csinh = ps_scale(ps_sub(ep, em), half);
        r = merge_reports("", r, compare_series("", lift(evaluate_lambda(cosh_series(x, k).series, 0)), lift(ccosh), k));
        r = merge_reports("", r, compare_series("", lift(evaluate_lambda(sinh_series(x, k).series, 0)), lift(csinh), k));
    }
    const Rational half(1, 2);
    auto ep = detail::classical_exp(half, k + 1), em = detail::classical_exp(-half, k + 1);
    auto ccosh = ps_scale(ps_add(ep, em), half), csinh = ps_scale(ps_sub(ep, em), half);
    auto ctanh = ps_div(ps_truncate(csinh, k), ps_truncate(ccosh, k));
    auto cacoth = ps_div(ps_truncate(ccosh, k), ps_divide_by_var(csinh));
    r = merge_reports("", r, compare_series("", lift(evaluate_lambda(tanh_half_series(k).series, 0)), lift(ctanh), k));
    r = merge_reports("", r,
                      compare_series("", lift(evaluate_lambda(coth_half_scaled_series(k).series, 0)), lift(cacoth), k));
    r.name = "classical_limits";
    r.order = k;
    return r;
}

inline IdentityReport check_classical_limits(std::size_t order) {
    return check_classical_limits(SuiteTables::build(order));
}

/// Generating-function tables against the Stirling-number oracle.
inline IdentityReport check_oracle_equivalence(const SuiteTables& t) {
    std::vector<LambdaPoly> lhs, rhs;
    for (std::size_t n = 0; n <= t.order; ++n) {
        lhs.push_back(t.beta.poly(n));
        rhs.push_back(oracle_degenerate_number(n, NumberKind::degenerate_bernoulli));
    }
    auto b = compare_values("", lhs, rhs, 0, t.order);
    lhs.clear();
    rhs.clear();
    for (std::size_t n = 0; n <= t.order; ++n) {
        lhs.push_back(t.euler.poly(n));
        rhs.push_back(oracle_degenerate_number(n, NumberKind::degenerate_euler));
    }
    return merge_reports("oracle_equivalence", b, compare_values("", lhs, rhs, 0, t.order));
}

/// tanh_lambda(1/2:a) * (a coth_lambda(1/2:a)) = a.
inline IdentityReport check_tanh_coth_consistency(std::size_t order) {
    auto prod = ps_mul(tanh_half_series(order).series, coth_half_scaled_series(order).series);
    return compare_series("tanh_coth_consistency", prod, Series<LambdaPoly>::monomial(LambdaPoly(1), 1, order), order);
}

struct SuiteResult {
    std::vector<IdentityReport> reports;

    bool all_passed() const {
        for (const auto& r : reports)
            if (!r.passed) return false;
        return true;
    }
};

/// Every proposition and theorem check in a fixed order: for each (x, y)
/// sample the double-angle identities at x and y and the addition formulas,
/// then the theorem checks on the supplied tables.
inline SuiteResult run_all(const SuiteTables& t, const std::vector<std::pair<Rational, Rational>>& samples) {
    SuiteResult out;
    auto push = [&](IdentityReport r) { out.reports.push_back(std::move(r)); };
    auto push_pair = [&](std::pair<IdentityReport, IdentityReport> p) {
        push(std::move(p.first));
        push(std::move(p.second));
    };
    const std::size_t k = t.order;
    for (const auto& [x, y] : samples) {
        push_pair(verify_double_angle(x, k));
        if (y != x) push_pair(verify_double_angle(y, k));
        push_pair(verify_addition(x, y, k));
    }
    push_pair(check_thm4(t));
    push(check_thm5_reflection(t.beta, k));
    push(check_thm5_coth_expansion(t));
    push_pair(check_thm6_thm7(t));
    push_pair(check_euler_structure(t.euler, k));
    push(check_classical_limits(t));
    push(check_oracle_equivalence(t));
    push(check_tanh_coth_consistency(k));
    return out;
}

inline SuiteResult run_all(std::size_t order, const std::vector<std::pair<Rational, Rational>>& samples) {
    return run_all(SuiteTables::build(order), samples);
}

} // namespace degen

#endif // DEGEN_IDENTITY_SUITE_HPP
