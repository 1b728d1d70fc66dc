#ifndef DEGEN_LAMBDA_POLY_HPP
#define DEGEN_LAMBDA_POLY_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "degen/error.hpp"
#include "degen/rational.hpp"

namespace degen {

/// Polynomial in the deformation parameter lambda with exact rational
/// coefficients, ascending by degree. The zero polynomial has no coefficients;
/// otherwise the last stored coefficient is nonzero.
class LambdaPoly {
public:
    LambdaPoly() = default;
    LambdaPoly(Rational c) { // NOLINT(google-explicit-constructor): constants embed implicitly
        if (c != 0) coeffs_.push_back(std::move(c));
    }
    LambdaPoly(int c) : LambdaPoly(Rational(c)) {} // NOLINT(google-explicit-constructor)
    explicit LambdaPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    LambdaPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

    /// The indeterminate lambda itself.
    static LambdaPoly lambda() { return LambdaPoly({Rational(0), Rational(1)}); }
    static LambdaPoly monomial(Rational c, std::size_t degree) {
        std::vector<Rational> v(degree + 1);
        v[degree] = std::move(c);
        return LambdaPoly(std::move(v));
    }

    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    Rational coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
    Rational constant_term() const { return coeff(0); }
    bool is_constant() const { return coeffs_.size() <= 1; }

    friend bool operator==(const LambdaPoly&, const LambdaPoly&) = default;

    LambdaPoly operator-() const {
        LambdaPoly r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    LambdaPoly& operator+=(const LambdaPoly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }
    LambdaPoly& operator-=(const LambdaPoly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }
    LambdaPoly& operator*=(const LambdaPoly& o) { return *this = *this * o; }

    friend LambdaPoly operator+(LambdaPoly a, const LambdaPoly& b) { return a += b; }
    friend LambdaPoly operator-(LambdaPoly a, const LambdaPoly& b) { return a -= b; }
    friend LambdaPoly operator*(const LambdaPoly& a, const LambdaPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return LambdaPoly(std::move(out));
    }
    friend LambdaPoly operator*(const LambdaPoly& a, const Rational& c) {
        if (c == 0) return {};
        LambdaPoly r = a;
        for (auto& x : r.coeffs_) x *= c;
        return r;
    }
    friend LambdaPoly operator*(const Rational& c, const LambdaPoly& a) { return a * c; }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

/// q(lambda) = p(-lambda).
inline LambdaPoly lp_reflect(const LambdaPoly& p) {
    std::vector<Rational> c = p.coefficients();
    for (std::size_t k = 1; k < c.size(); k += 2) c[k] = -c[k];
    return LambdaPoly(std::move(c));
}

/// Horner evaluation at a rational lambda.
inline Rational lp_eval(const LambdaPoly& p, const Rational& v) {
    Rational acc = 0;
    const auto& c = p.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * v + *it;
    return acc;
}

inline LambdaPoly lp_pow(const LambdaPoly& base, unsigned e) {
    LambdaPoly r(1);
    for (unsigned i = 0; i < e; ++i) r *= base;
    return r;
}

/// Ascending-degree rendering with 'l' for lambda, e.g. "1/6 + 1/2*l" or
/// "-1/2*l - l^2". Unit coefficients are elided.
inline std::string to_string(const LambdaPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    const auto& c = p.coefficients();
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] == 0) continue;
        Rational mag = c[k] < 0 ? Rational(-c[k]) : c[k];
        if (out.empty()) {
            if (c[k] < 0) out += "-";
        } else {
            out += c[k] < 0 ? " - " : " + ";
        }
        if (k == 0) {
            out += mag.str();
            continue;
        }
        if (mag != 1) out += mag.str() + "*";
        out += "l";
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

/// Inverse of to_string. Terms are "c", "c*l", "c*l^k", "l", "l^k" joined by
/// '+' or '-'; whitespace is ignored. Repeated degrees accumulate.
inline LambdaPoly parse_lambda_poly(std::string_view text) {
    std::string s;
    std::vector<std::size_t> column; // column of s[i] in text
    bool gap = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == ' ' || text[i] == '\t') {
            gap = !s.empty();
            continue;
        }
        auto numeric = [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)) || ch == '/'; };
        if (gap && numeric(text[i]) && numeric(s.back())) throw parse_error("unexpected whitespace in number", i + 1);
        gap = false;
        s.push_back(text[i]);
        column.push_back(i + 1);
    }
    auto col = [&](std::size_t pos) { return pos < column.size() ? column[pos] : text.size() + 1; };
    if (s.empty()) throw parse_error("empty polynomial", 1);

    LambdaPoly result;
    std::size_t pos = 0;
    bool first = true;
    while (pos < s.size()) {
        bool negative = false;
        if (s[pos] == '+' || s[pos] == '-') {
            negative = s[pos] == '-';
            ++pos;
        } else if (!first) {
            throw parse_error("expected '+' or '-'", col(pos));
        }
        first = false;

        Rational c = 1;
        bool have_coeff = false;
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            try {
                c = detail::parse_rational_at(s, pos);
            } catch (const parse_error& e) {
                throw parse_error("malformed rational", col(e.column() - 1));
            }
            have_coeff = true;
        }
        std::size_t degree = 0;
        if (have_coeff && pos < s.size() && s[pos] == '*') {
            ++pos;
            if (pos >= s.size() || s[pos] != 'l') throw parse_error("expected 'l'", col(pos));
        }
        if (pos < s.size() && s[pos] == 'l') {
            ++pos;
            degree = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                std::size_t before = pos;
                BigInt d;
                try {
                    d = detail::parse_digits(s, pos, 0);
                } catch (const parse_error&) {
                    throw parse_error("expected exponent", col(before));
                }
                if (d > 4096) throw parse_error("exponent too large", col(before));
                degree = static_cast<std::size_t>(d);
            }
        } else if (!have_coeff) {
            throw parse_error("expected term", col(pos));
        }
        result += LambdaPoly::monomial(negative ? Rational(-c) : c, degree);
    }
    return result;
}

} // namespace degen

#endif // DEGEN_LAMBDA_POLY_HPP
