#ifndef DEGEN_POWER_SERIES_HPP
#define DEGEN_POWER_SERIES_HPP

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "degen/lambda_poly.hpp"
#include "degen/rational.hpp"

namespace degen {

template <class R>
struct ring_traits;

template <>
struct ring_traits<Rational> {
    static constexpr const char* tag = "rational";
    static bool is_unit(const Rational& r) { return r != 0; }
    static Rational inverse(const Rational& r) { return Rational(1) / r; }
    static std::string render(const Rational& r) { return to_string(r); }
    static bool needs_parens(const Rational&) { return false; }
    static bool is_negative(const Rational& r) { return r < 0; }
};

template <>
struct ring_traits<LambdaPoly> {
    static constexpr const char* tag = "lambda-poly";
    // only nonzero constants are invertible in Q[lambda]
    static bool is_unit(const LambdaPoly& p) { return p.degree() == 0; }
    static LambdaPoly inverse(const LambdaPoly& p) { return LambdaPoly(Rational(1) / p.constant_term()); }
    static std::string render(const LambdaPoly& p) { return to_string(p); }
    static bool needs_parens(const LambdaPoly& p) { return p.degree() > 0; }
    static bool is_negative(const LambdaPoly& p) { return p.degree() == 0 && p.constant_term() < 0; }
};

/// Coefficient rings a Series can be built over.
template <class R>
concept CoefficientRing = requires(const R& a, const R& b, const Rational& q) {
    { a + b } -> std::convertible_to<R>;
    { a - b } -> std::convertible_to<R>;
    { a * b } -> std::convertible_to<R>;
    { a * q } -> std::convertible_to<R>;
    { a == b } -> std::convertible_to<bool>;
    { ring_traits<R>::is_unit(a) } -> std::convertible_to<bool>;
    { ring_traits<R>::inverse(a) } -> std::convertible_to<R>;
};

/// Truncated formal power series c_0 + c_1 v + ... + c_K v^K with ordinary
/// (not factorial-weighted) coefficients. Always holds exactly order()+1 entries.
/// The ring is part of the type, so mixing rings is rejected at compile time.
template <CoefficientRing R>
class Series {
public:
    using ring_type = R;

    explicit Series(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw std::invalid_argument("series needs at least one coefficient");
    }

    static Series zero(std::size_t order) { return Series(std::vector<R>(order + 1, R(0))); }
    static Series constant(R c, std::size_t order) {
        std::vector<R> v(order + 1, R(0));
        v[0] = std::move(c);
        return Series(std::move(v));
    }
    static Series one(std::size_t order) { return constant(R(1), order); }
    /// c * v^k truncated at `order`.
    static Series monomial(R c, std::size_t k, std::size_t order) {
        std::vector<R> v(order + 1, R(0));
        if (k <= order) v[k] = std::move(c);
        return Series(std::move(v));
    }
    /// Builds from exponential-generating coefficients e_n, storing e_n / n!.
    static Series from_egf(const std::vector<R>& egf) {
        std::vector<R> v;
        v.reserve(egf.size());
        for (std::size_t n = 0; n < egf.size(); ++n) v.push_back(egf[n] * Rational(BigInt(1), factorial(static_cast<unsigned>(n))));
        return Series(std::move(v));
    }

    std::size_t order() const { return coeffs_.size() - 1; }
    const R& operator[](std::size_t n) const { return coeffs_.at(n); }
    const std::vector<R>& coefficients() const { return coeffs_; }

    friend bool operator==(const Series&, const Series&) = default;

private:
    std::vector<R> coeffs_;
};

template <CoefficientRing R>
Series<R> ps_truncate(const Series<R>& s, std::size_t order) {
    if (order > s.order()) throw std::out_of_range("cannot extend a truncated series");
    std::vector<R> v(s.coefficients().begin(), s.coefficients().begin() + static_cast<std::ptrdiff_t>(order) + 1);
    return Series<R>(std::move(v));
}

template <CoefficientRing R>
Series<R> ps_add(const Series<R>& a, const Series<R>& b) {
    std::size_t k = std::min(a.order(), b.order());
    std::vector<R> v;
    v.reserve(k + 1);
    for (std::size_t n = 0; n <= k; ++n) v.push_back(a[n] + b[n]);
    return Series<R>(std::move(v));
}

template <CoefficientRing R>
Series<R> ps_sub(const Series<R>& a, const Series<R>& b) {
    std::size_t k = std::min(a.order(), b.order());
    std::vector<R> v;
    v.reserve(k + 1);
    for (std::size_t n = 0; n <= k; ++n) v.push_back(a[n] - b[n]);
    return Series<R>(std::move(v));
}

template <CoefficientRing R>
Series<R> ps_scale(const Series<R>& s, const R& c) {
    std::vector<R> v;
    v.reserve(s.order() + 1);
    for (const auto& x : s.coefficients()) v.push_back(x * c);
    return Series<R>(std::move(v));
}

/// Cauchy product, truncated to the smaller order.
template <CoefficientRing R>
Series<R> ps_mul(const Series<R>& a, const Series<R>& b) {
    std::size_t k = std::min(a.order(), b.order());
    std::vector<R> v(k + 1, R(0));
    for (std::size_t i = 0; i <= k; ++i) {
        if (a[i] == R(0)) continue;
        for (std::size_t j = 0; i + j <= k; ++j) v[i + j] = v[i + j] + a[i] * b[j];
    }
    return Series<R>(std::move(v));
}

/// num / den by forward substitution: q_n = (num_n - sum_{i<n} q_i den_{n-i}) / den_0.
/// Requires den_0 to be a unit; series with a zero constant term must have the
/// variable factored out first (see ps_divide_by_var).
template <CoefficientRing R>
Series<R> ps_div(const Series<R>& num, const Series<R>& den) {
    if (!ring_traits<R>::is_unit(den[0]))
        throw std::domain_error("series division: leading coefficient of the divisor is not invertible");
    std::size_t k = std::min(num.order(), den.order());
    R inv = ring_traits<R>::inverse(den[0]);
    std::vector<R> q;
    q.reserve(k + 1);
    for (std::size_t n = 0; n <= k; ++n) {
        R acc = num[n];
        for (std::size_t i = 0; i < n; ++i) acc = acc - q[i] * den[n - i];
        q.push_back(acc * inv);
    }
    return Series<R>(std::move(q));
}

/// Substitution v -> c v: coefficient n is multiplied by c^n.
template <CoefficientRing R>
Series<R> ps_scale_var(const Series<R>& s, const R& c) {
    std::vector<R> v;
    v.reserve(s.order() + 1);
    R power(1);
    for (std::size_t n = 0; n <= s.order(); ++n) {
        v.push_back(s[n] * power);
        power = power * c;
    }
    return Series<R>(std::move(v));
}

/// s / v for a series with zero constant term; the order drops by one.
template <CoefficientRing R>
Series<R> ps_divide_by_var(const Series<R>& s) {
    if (!(s[0] == R(0))) throw std::domain_error("series has a nonzero constant term");
    if (s.order() == 0) throw std::domain_error("order-0 series cannot be divided by the variable");
    return Series<R>(std::vector<R>(s.coefficients().begin() + 1, s.coefficients().end()));
}

/// v * s, keeping the order of s (the top coefficient falls off).
template <CoefficientRing R>
Series<R> ps_multiply_by_var(const Series<R>& s) {
    std::vector<R> v;
    v.reserve(s.order() + 1);
    v.push_back(R(0));
    for (std::size_t n = 0; n < s.order(); ++n) v.push_back(s[n]);
    return Series<R>(std::move(v));
}

/// Embeds a rational series into Q[lambda] coefficients.
inline Series<LambdaPoly> lift(const Series<Rational>& s) {
    std::vector<LambdaPoly> v(s.coefficients().begin(), s.coefficients().end());
    return Series<LambdaPoly>(std::move(v));
}

/// Specializes lambda to a rational value coefficient-wise.
inline Series<Rational> evaluate_lambda(const Series<LambdaPoly>& s, const Rational& value) {
    std::vector<Rational> v;
    v.reserve(s.order() + 1);
    for (const auto& c : s.coefficients()) v.push_back(lp_eval(c, value));
    return Series<Rational>(std::move(v));
}

template <CoefficientRing R>
struct SeriesMatch {
    bool matched = true;
    std::optional<std::size_t> first_mismatch;
    std::optional<R> lhs;
    std::optional<R> rhs;

    explicit operator bool() const { return matched; }
};

/// Compares c_0..c_upto; on mismatch reports the smallest failing index.
template <CoefficientRing R>
SeriesMatch<R> ps_eq(const Series<R>& a, const Series<R>& b, std::size_t upto) {
    if (upto > a.order() || upto > b.order())
        throw std::out_of_range("comparison index " + std::to_string(upto) + " exceeds series order");
    for (std::size_t n = 0; n <= upto; ++n) {
        if (!(a[n] == b[n])) return SeriesMatch<R>{false, n, a[n], b[n]};
    }
    return SeriesMatch<R>{};
}

/// n! * c_n, the exponential-generating coefficient.
template <CoefficientRing R>
R ps_coeff_egf(const Series<R>& s, std::size_t n) {
    if (n > s.order()) throw std::out_of_range("coefficient index " + std::to_string(n) + " exceeds series order");
    return s[n] * Rational(factorial(static_cast<unsigned>(n)));
}

template <CoefficientRing R>
std::vector<R> egf_coefficients(const Series<R>& s) {
    std::vector<R> out;
    out.reserve(s.order() + 1);
    for (std::size_t n = 0; n <= s.order(); ++n) out.push_back(ps_coeff_egf(s, n));
    return out;
}

/// "c0 + c1*a + c2*a^2 + ..." with zero terms omitted and polynomial
/// coefficients parenthesised.
template <CoefficientRing R>
std::string to_string(const Series<R>& s, const std::string& var = "a") {
    std::string out;
    for (std::size_t n = 0; n <= s.order(); ++n) {
        if (s[n] == R(0)) continue;
        const bool negative = ring_traits<R>::is_negative(s[n]);
        const R magnitude = negative ? R(s[n] * Rational(-1)) : s[n];
        std::string c = ring_traits<R>::render(magnitude);
        if (ring_traits<R>::needs_parens(magnitude)) c = "(" + c + ")";
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (n == 0) {
            out += c;
            continue;
        }
        out += c + "*" + var;
        if (n > 1) out += "^" + std::to_string(n);
    }
    return out.empty() ? "0" : out;
}

} // namespace degen

#endif // DEGEN_POWER_SERIES_HPP
