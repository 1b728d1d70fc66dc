#ifndef DEGEN_RATIONAL_HPP
#define DEGEN_RATIONAL_HPP

#include <cctype>
#include <compare>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "degen/error.hpp"

namespace degen {

using BigInt = boost::multiprecision::cpp_int;

// cpp_rational keeps numerator/denominator reduced with a positive
// denominator after every operation, so equality is structural.
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(const BigInt& num, const BigInt& den = 1) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    return Rational(num, den);
}

inline BigInt numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

/// Renders "-3/2", "7", "0".
inline std::string to_string(const Rational& r) { return r.str(); }

namespace detail {

inline BigInt parse_digits(std::string_view s, std::size_t& pos, std::size_t base_column) {
    std::size_t start = pos;
    BigInt value = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        value = value * 10 + (s[pos] - '0');
        ++pos;
    }
    if (pos == start) throw parse_error("expected digit", base_column + pos);
    return value;
}

/// Parses an optionally signed rational literal starting at `pos`, advancing it.
/// `base_column` is the 1-based column of s[0] in the caller's input.
inline Rational parse_rational_at(std::string_view s, std::size_t& pos, std::size_t base_column = 1) {
    bool negative = false;
    if (pos < s.size() && s[pos] == '-') {
        negative = true;
        ++pos;
    }
    BigInt num = parse_digits(s, pos, base_column);
    BigInt den = 1;
    if (pos < s.size() && s[pos] == '/') {
        ++pos;
        std::size_t den_pos = pos;
        den = parse_digits(s, pos, base_column);
        if (den == 0) throw parse_error("zero denominator", base_column + den_pos);
    }
    Rational r(num, den);
    return negative ? Rational(-r) : r;
}

} // namespace detail

/// Parses the exact text format: optional '-', decimal digits, optional '/' and
/// a positive decimal denominator. No whitespace, no decimal points.
inline Rational parse_rational(std::string_view text) {
    std::size_t pos = 0;
    Rational r = detail::parse_rational_at(text, pos);
    if (pos != text.size()) throw parse_error("unexpected character '" + std::string(1, text[pos]) + "'", pos + 1);
    return r;
}

/// p-adic valuation with a distinguished infinity for zero.
class Valuation {
public:
    constexpr Valuation() = default;
    constexpr explicit Valuation(std::int64_t v) : finite_(true), value_(v) {}

    static constexpr Valuation infinity() { return Valuation{}; }

    constexpr bool is_infinite() const { return !finite_; }
    std::int64_t value() const {
        if (!finite_) throw std::logic_error("valuation of zero is infinite");
        return value_;
    }

    friend constexpr Valuation operator+(Valuation a, Valuation b) {
        if (!a.finite_ || !b.finite_) return infinity();
        return Valuation(a.value_ + b.value_);
    }
    friend constexpr bool operator==(Valuation a, Valuation b) {
        return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
    }
    // infinity compares greater than every finite valuation
    friend constexpr std::strong_ordering operator<=>(Valuation a, Valuation b) {
        if (!a.finite_ || !b.finite_) return b.finite_ <=> a.finite_;
        return a.value_ <=> b.value_;
    }

private:
    bool finite_ = false;
    std::int64_t value_ = 0;
};

inline std::string to_string(Valuation v) { return v.is_infinite() ? "inf" : std::to_string(v.value()); }

inline bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::int64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

inline void require_odd_prime(std::int64_t p) {
    if (p == 2 || !is_prime(p)) throw std::invalid_argument("expected an odd prime, got " + std::to_string(p));
}

/// Exponent of p in a nonzero integer; strips those factors from n.
inline std::int64_t strip_prime(BigInt& n, std::int64_t p) {
    std::int64_t count = 0;
    BigInt q, r;
    for (;;) {
        boost::multiprecision::divide_qr(n, BigInt(p), q, r);
        if (r != 0) return count;
        n = q;
        ++count;
    }
}

/// v_p(r), so that r = p^v * u with u a p-adic unit; infinite for r = 0.
inline Valuation p_valuation(const Rational& r, std::int64_t p) {
    require_odd_prime(p);
    if (r == 0) return Valuation::infinity();
    BigInt num = numerator_of(r), den = denominator_of(r);
    return Valuation(strip_prime(num, p) - strip_prime(den, p));
}

/// |r|_p = p^{-v_p(r)}, exactly; 0 for r = 0.
inline Rational p_norm(const Rational& r, std::int64_t p) {
    Valuation v = p_valuation(r, p);
    if (v.is_infinite()) return 0;
    BigInt pw = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(v.value() < 0 ? -v.value() : v.value()));
    return v.value() >= 0 ? Rational(BigInt(1), pw) : Rational(pw);
}

inline BigInt factorial(unsigned n) {
    BigInt f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

inline BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    BigInt b = 1;
    for (unsigned i = 1; i <= k; ++i) b = b * (n - k + i) / i;
    return b;
}

/// Rational power p^e for any sign of e.
inline Rational rational_pow(std::int64_t p, std::int64_t e) {
    BigInt pw = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(e < 0 ? -e : e));
    return e >= 0 ? Rational(pw) : Rational(BigInt(1), pw);
}

} // namespace degen

#endif // DEGEN_RATIONAL_HPP
