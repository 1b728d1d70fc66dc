#ifndef DEGEN_INTEGRAND_PARSER_HPP
#define DEGEN_INTEGRAND_PARSER_HPP

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "degen/error.hpp"
#include "degen/padic.hpp"
#include "degen/rational.hpp"

namespace degen {

namespace detail {

// Whitespace-free view of the input that remembers original 1-based columns.
class IntegrandCursor {
public:
    explicit IntegrandCursor(std::string_view text) : length_(text.size()) {
        for (std::size_t i = 0; i < text.size(); ++i) {
            if (std::isspace(static_cast<unsigned char>(text[i]))) continue;
            chars_.push_back(text[i]);
            columns_.push_back(i + 1);
        }
    }

    bool done() const { return pos_ >= chars_.size(); }
    char peek() const { return done() ? '\0' : chars_[pos_]; }
    std::size_t column() const { return done() ? length_ + 1 : columns_[pos_]; }

    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    bool accept_word(std::string_view w) {
        if (chars_.compare(pos_, w.size(), w) != 0) return false;
        pos_ += w.size();
        return true;
    }
    [[noreturn]] void fail(const std::string& what) const {
        if (done()) throw parse_error(what + ", found end of input", column());
        throw parse_error(what + ", found '" + std::string(1, peek()) + "'", column());
    }

    unsigned integer() {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected digit");
        std::size_t start_col = column();
        unsigned long long v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + static_cast<unsigned>(chars_[pos_] - '0');
            if (v > 1'000'000) throw parse_error("integer too large", start_col);
            ++pos_;
        }
        return static_cast<unsigned>(v);
    }

    Rational rational() {
        try {
            return parse_rational_at(chars_, pos_);
        } catch (const parse_error& e) {
            // parse_rational_at reports 1-based indices into chars_
            std::size_t idx = e.column() - 1;
            throw parse_error("malformed rational", idx < columns_.size() ? columns_[idx] : length_ + 1);
        }
    }

private:
    std::string chars_;
    std::vector<std::size_t> columns_;
    std::size_t length_;
    std::size_t pos_ = 0;
};

} // namespace detail

/// Parses an integrand:
///   "poly:" term (('+'|'-') term)*   with term := c | c*x | c*x^k | x | x^k
///   "ff:n=<int>[,lambda=<rational>]"  (lambda defaults to 1)
/// Whitespace is ignored. Errors carry the 1-based column of the offending
/// character in the original text.
inline IntegrandSpec parse_integrand(std::string_view text) {
    detail::IntegrandCursor in(text);
    if (in.accept_word("poly:")) {
        std::vector<MonomialTerm> terms;
        bool first = true;
        while (first || !in.done()) {
            bool negative = false;
            if (in.accept('-'))
                negative = true;
            else if (!in.accept('+') && !first)
                in.fail("expected '+' or '-'");
            first = false;

            Rational c = 1;
            bool have_coeff = false;
            if (std::isdigit(static_cast<unsigned char>(in.peek()))) {
                c = in.rational();
                have_coeff = true;
                if (in.accept('*') && in.peek() != 'x') in.fail("expected 'x'");
            }
            unsigned degree = 0;
            if (in.accept('x')) {
                degree = 1;
                if (in.accept('^')) {
                    std::size_t col = in.column();
                    degree = in.integer();
                    if (degree > max_integrand_degree)
                        throw parse_error("degree " + std::to_string(degree) + " exceeds the cap of " +
                                              std::to_string(max_integrand_degree),
                                          col);
                }
            } else if (!have_coeff) {
                in.fail("expected coefficient or 'x'");
            }
            terms.push_back({negative ? Rational(-c) : c, degree});
        }
        return IntegrandSpec::monomial(std::move(terms));
    }
    if (in.accept_word("ff:")) {
        if (!in.accept_word("n=")) in.fail("expected 'n='");
        std::size_t col = in.column();
        unsigned n = in.integer();
        if (n > max_integrand_degree)
            throw parse_error("degree " + std::to_string(n) + " exceeds the cap of " +
                                  std::to_string(max_integrand_degree),
                              col);
        Rational lambda = 1;
        if (in.accept(',')) {
            if (!in.accept_word("lambda=")) in.fail("expected 'lambda='");
            lambda = in.rational();
        }
        if (!in.done()) in.fail("unexpected trailing input");
        return IntegrandSpec::falling(n, lambda);
    }
    in.fail("expected 'poly:' or 'ff:'");
}

} // namespace degen

#endif // DEGEN_INTEGRAND_PARSER_HPP
