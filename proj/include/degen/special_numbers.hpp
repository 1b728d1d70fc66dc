#ifndef DEGEN_SPECIAL_NUMBERS_HPP
#define DEGEN_SPECIAL_NUMBERS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "degen/lambda_poly.hpp"
#include "degen/power_series.hpp"
#include "degen/rational.hpp"

namespace degen {

enum class NumberKind { degenerate_bernoulli, degenerate_euler, cauchy, bernoulli, euler };

inline std::string to_string(NumberKind k) {
    switch (k) {
    case NumberKind::degenerate_bernoulli: return "degenerate-bernoulli";
    case NumberKind::degenerate_euler: return "degenerate-euler";
    case NumberKind::cauchy: return "cauchy";
    case NumberKind::bernoulli: return "bernoulli";
    case NumberKind::euler: return "euler";
    }
    return "?";
}

inline NumberKind parse_number_kind(std::string_view s) {
    for (auto k : {NumberKind::degenerate_bernoulli, NumberKind::degenerate_euler, NumberKind::cauchy,
                   NumberKind::bernoulli, NumberKind::euler})
        if (to_string(k) == s) return k;
    throw std::invalid_argument("unknown number kind '" + std::string(s) + "'");
}

inline bool is_degenerate(NumberKind k) {
    return k == NumberKind::degenerate_bernoulli || k == NumberKind::degenerate_euler;
}

/// Entries 0..max_index of one number family. Degenerate families hold
/// polynomials in lambda, the classical ones (and Cauchy) hold rationals.
struct NumberTable {
    NumberKind kind;
    std::size_t max_index;
    std::variant<std::vector<LambdaPoly>, std::vector<Rational>> values;

    const LambdaPoly& poly(std::size_t n) const { return std::get<std::vector<LambdaPoly>>(values).at(n); }
    const Rational& rational(std::size_t n) const { return std::get<std::vector<Rational>>(values).at(n); }

    /// Entry n as a lambda-polynomial regardless of family.
    LambdaPoly as_poly(std::size_t n) const {
        if (auto* p = std::get_if<std::vector<LambdaPoly>>(&values)) return p->at(n);
        return LambdaPoly(std::get<std::vector<Rational>>(values).at(n));
    }

    std::vector<std::string> rendered() const {
        std::vector<std::string> out;
        std::visit(
            [&](const auto& vec) {
                for (const auto& v : vec) out.push_back(to_string(v));
            },
            values);
        return out;
    }
};

/// (x)_{n,lambda} = x (x - lambda) ... (x - (n-1) lambda), expanded in lambda.
inline LambdaPoly falling_factorial(const Rational& x, long n) {
    if (n < 0) throw std::invalid_argument("falling factorial needs n >= 0");
    LambdaPoly r(1);
    for (long i = 0; i < n; ++i) r *= LambdaPoly({x, Rational(-i)});
    return r;
}

/// e_lambda^x(t) = sum (x)_{n,lambda} t^n / n!, truncated at t^order.
inline Series<LambdaPoly> degenerate_exp_series(const Rational& x, std::size_t order) {
    std::vector<LambdaPoly> egf;
    egf.reserve(order + 1);
    LambdaPoly ff(1);
    for (std::size_t n = 0; n <= order; ++n) {
        egf.push_back(ff);
        ff *= LambdaPoly({x, Rational(-static_cast<long>(n))});
    }
    return Series<LambdaPoly>::from_egf(egf);
}

/// (1/lambda) log(1 + lambda t) = sum_{k>=1} (-1)^{k-1} lambda^{k-1} t^k / k.
inline Series<LambdaPoly> log1p_over_lambda_series(std::size_t order) {
    if (order < 1) throw std::invalid_argument("log1p series needs order >= 1");
    std::vector<LambdaPoly> v(order + 1);
    for (std::size_t k = 1; k <= order; ++k) {
        Rational c(BigInt(k % 2 == 1 ? 1 : -1), BigInt(k));
        v[k] = LambdaPoly::monomial(c, k - 1);
    }
    return Series<LambdaPoly>(std::move(v));
}

/// beta_{n,lambda}: EGF coefficients of ((1/lambda) log(1+lambda t)) / (e_lambda(t) - 1).
/// Both series vanish at t = 0 with unit linear term, so one factor of t is
/// cancelled before dividing.
inline NumberTable degenerate_bernoulli(std::size_t max_index) {
    std::size_t work = max_index + 1;
    auto num = ps_divide_by_var(log1p_over_lambda_series(work));
    auto den = ps_divide_by_var(ps_sub(degenerate_exp_series(Rational(1), work), Series<LambdaPoly>::one(work)));
    return {NumberKind::degenerate_bernoulli, max_index, egf_coefficients(ps_div(num, den))};
}

/// E_{n,lambda}: EGF coefficients of 2 / (e_lambda(t) + 1).
inline NumberTable degenerate_euler(std::size_t max_index) {
    auto den = ps_add(degenerate_exp_series(Rational(1), max_index), Series<LambdaPoly>::one(max_index));
    auto q = ps_div(Series<LambdaPoly>::constant(LambdaPoly(2), max_index), den);
    return {NumberKind::degenerate_euler, max_index, egf_coefficients(q)};
}

/// Cauchy numbers of the first kind: t / log(1+t) = sum C_n t^n / n!.
inline NumberTable cauchy_numbers(std::size_t max_index) {
    // log(1+t)/t = sum_k (-1)^k t^k / (k+1)
    std::vector<Rational> v;
    v.reserve(max_index + 1);
    for (std::size_t k = 0; k <= max_index; ++k) v.emplace_back(BigInt(k % 2 == 0 ? 1 : -1), BigInt(k + 1));
    auto q = ps_div(Series<Rational>::one(max_index), Series<Rational>(std::move(v)));
    return {NumberKind::cauchy, max_index, egf_coefficients(q)};
}

/// Classical Bernoulli (B_1 = -1/2) or Euler numbers, computed without any
/// lambda machinery: Bernoulli by sum_{k<=n} C(n+1,k) B_k = 0, Euler as the
/// EGF of 2/(e^t + 1).
inline NumberTable classical_numbers(NumberKind kind, std::size_t max_index) {
    if (kind == NumberKind::bernoulli) {
        std::vector<Rational> b;
        b.reserve(max_index + 1);
        b.emplace_back(1);
        for (std::size_t n = 1; n <= max_index; ++n) {
            Rational acc = 0;
            for (std::size_t k = 0; k < n; ++k) acc += Rational(binomial(unsigned(n + 1), unsigned(k))) * b[k];
            b.push_back(-acc / Rational(n + 1));
        }
        return {kind, max_index, std::move(b)};
    }
    if (kind == NumberKind::euler) {
        std::vector<Rational> exp_plus_one;
        exp_plus_one.reserve(max_index + 1);
        for (std::size_t n = 0; n <= max_index; ++n)
            exp_plus_one.emplace_back(BigInt(n == 0 ? 2 : 1), factorial(unsigned(n)));
        auto q = ps_div(Series<Rational>::constant(Rational(2), max_index), Series<Rational>(std::move(exp_plus_one)));
        return {kind, max_index, egf_coefficients(q)};
    }
    throw std::invalid_argument("classical_numbers: kind must be bernoulli or euler");
}

/// Dispatches on kind.
inline NumberTable number_table(NumberKind kind, std::size_t max_index) {
    switch (kind) {
    case NumberKind::degenerate_bernoulli: return degenerate_bernoulli(max_index);
    case NumberKind::degenerate_euler: return degenerate_euler(max_index);
    case NumberKind::cauchy: return cauchy_numbers(max_index);
    default: return classical_numbers(kind, max_index);
    }
}

/// Signed Stirling numbers of the first kind, (x)_n = sum_k s(n,k) x^k.
inline std::vector<BigInt> stirling_first_row(std::size_t n) {
    std::vector<BigInt> row{1};
    for (std::size_t m = 0; m < n; ++m) {
        // s(m+1,k) = s(m,k-1) - m s(m,k)
        std::vector<BigInt> next(row.size() + 1, 0);
        for (std::size_t k = 0; k < row.size(); ++k) {
            next[k + 1] += row[k];
            next[k] -= BigInt(m) * row[k];
        }
        row = std::move(next);
    }
    return row;
}

inline BigInt stirling_first(long n, long k) {
    if (n < 0 || k < 0 || k > n) throw std::out_of_range("stirling_first needs 0 <= k <= n");
    return stirling_first_row(static_cast<std::size_t>(n))[static_cast<std::size_t>(k)];
}

/// beta_{n,lambda} = sum_k s(n,k) lambda^{n-k} B_k, and the same with E_k for the
/// Euler family. Independent of the generating-function route.
inline LambdaPoly oracle_degenerate_number(std::size_t n, NumberKind kind) {
    NumberKind classical;
    if (kind == NumberKind::degenerate_bernoulli || kind == NumberKind::bernoulli)
        classical = NumberKind::bernoulli;
    else if (kind == NumberKind::degenerate_euler || kind == NumberKind::euler)
        classical = NumberKind::euler;
    else
        throw std::invalid_argument("oracle_degenerate_number: kind must be bernoulli or euler");
    NumberTable base = classical_numbers(classical, n);
    std::vector<BigInt> s = stirling_first_row(n);
    LambdaPoly acc;
    for (std::size_t k = 0; k <= n; ++k) {
        if (s[k] == 0) continue;
        acc += LambdaPoly::monomial(Rational(s[k]) * base.rational(k), n - k);
    }
    return acc;
}

} // namespace degen

#endif // DEGEN_SPECIAL_NUMBERS_HPP
