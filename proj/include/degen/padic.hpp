#ifndef DEGEN_PADIC_HPP
#define DEGEN_PADIC_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "degen/lambda_poly.hpp"
#include "degen/rational.hpp"
#include "degen/special_numbers.hpp"

namespace degen {

/// Largest polynomial degree the Riemann-sum engine accepts.
inline constexpr unsigned max_integrand_degree = 12;

/// Odd prime p and the number of p-adic digits kept in unit parts.
class PadicContext {
public:
    PadicContext(std::int64_t p, unsigned precision = 32) : p_(p), precision_(precision) {
        require_odd_prime(p);
        if (precision == 0) throw std::invalid_argument("p-adic precision must be at least 1");
        modulus_ = boost::multiprecision::pow(BigInt(p), precision);
    }

    std::int64_t prime() const { return p_; }
    unsigned precision() const { return precision_; }
    /// p^precision
    const BigInt& modulus() const { return modulus_; }

private:
    std::int64_t p_;
    unsigned precision_;
    BigInt modulus_;
};

/// p^valuation * unit with unit in [1, p^precision) prime to p, or zero.
struct PadicNumber {
    Valuation valuation = Valuation::infinity();
    BigInt unit = 0;

    bool is_zero() const { return valuation.is_infinite(); }
    friend bool operator==(const PadicNumber&, const PadicNumber&) = default;
};

namespace detail {

inline BigInt mod_floor(const BigInt& a, const BigInt& m) {
    BigInt r = a % m;
    return r < 0 ? BigInt(r + m) : r;
}

// inverse of a modulo m, gcd(a, m) = 1 assumed
inline BigInt mod_inverse(const BigInt& a, const BigInt& m) {
    BigInt old_r = mod_floor(a, m), r = m, old_s = 1, s = 0;
    while (r != 0) {
        BigInt q = old_r / r;
        BigInt tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    if (old_r != 1) throw std::domain_error("value is not invertible modulo p^precision");
    return mod_floor(old_s, m);
}

} // namespace detail

/// Embeds an exact rational: valuation v_p(r), unit = (p-free numerator) *
/// (p-free denominator)^{-1} mod p^precision.
inline PadicNumber exact_to_padic(const Rational& r, const PadicContext& ctx) {
    if (r == 0) return {};
    BigInt num = numerator_of(r), den = denominator_of(r);
    std::int64_t v = strip_prime(num, ctx.prime()) - strip_prime(den, ctx.prime());
    BigInt unit = detail::mod_floor(num * detail::mod_inverse(den, ctx.modulus()), ctx.modulus());
    return {Valuation(v), std::move(unit)};
}

/// Valuation of u - v as far as the stored digits determine it; infinite when
/// the residues agree to full precision.
inline Valuation padic_difference_valuation(const PadicNumber& u, const PadicNumber& v, const PadicContext& ctx) {
    if (u.is_zero() && v.is_zero()) return Valuation::infinity();
    if (u.is_zero()) return v.valuation;
    if (v.is_zero()) return u.valuation;
    std::int64_t vu = u.valuation.value(), vv = v.valuation.value();
    std::int64_t w0 = std::min(vu, vv);
    // both shifted to the common valuation w0; only precision digits are meaningful
    BigInt au = u.unit * boost::multiprecision::pow(BigInt(ctx.prime()), static_cast<unsigned>(vu - w0));
    BigInt av = v.unit * boost::multiprecision::pow(BigInt(ctx.prime()), static_cast<unsigned>(vv - w0));
    BigInt diff = detail::mod_floor(au - av, ctx.modulus());
    if (diff == 0) return Valuation::infinity();
    return Valuation(w0 + strip_prime(diff, ctx.prime()));
}

/// |u - v|_p = p^{-w}; 0 when the two agree to the context precision.
inline Rational padic_distance(const PadicNumber& u, const PadicNumber& v, const PadicContext& ctx) {
    Valuation w = padic_difference_valuation(u, v, ctx);
    if (w.is_infinite()) return 0;
    return rational_pow(ctx.prime(), -w.value());
}

/// Renders a distance p^{-w} as "p^-w" (e.g. "5^-2"), and exact agreement as "0".
inline std::string distance_string(Valuation w, std::int64_t p) {
    if (w.is_infinite()) return "0";
    return std::to_string(p) + "^" + std::to_string(-w.value());
}

enum class Measure { volkenborn, fermionic };

inline std::string to_string(Measure m) { return m == Measure::volkenborn ? "volkenborn" : "fermionic"; }

inline Measure parse_measure(std::string_view s) {
    if (s == "volkenborn") return Measure::volkenborn;
    if (s == "fermionic") return Measure::fermionic;
    throw std::invalid_argument("unknown measure '" + std::string(s) + "'");
}

struct MonomialTerm {
    Rational coeff;
    unsigned degree;
    friend bool operator==(const MonomialTerm&, const MonomialTerm&) = default;
};

/// A polynomial integrand, either sum c_k x^k or the lambda-falling factorial
/// (x)_{n,lambda} at a rational lambda.
struct IntegrandSpec {
    enum class Basis { monomial, falling };

    Basis basis = Basis::monomial;
    std::vector<MonomialTerm> terms; // monomial basis, normalized
    unsigned n = 0;                  // falling basis
    Rational lambda = 0;             // falling basis

    static IntegrandSpec monomial(std::vector<MonomialTerm> terms) {
        IntegrandSpec s;
        s.basis = Basis::monomial;
        // descending degree, merged, zero terms dropped
        std::sort(terms.begin(), terms.end(),
                  [](const MonomialTerm& a, const MonomialTerm& b) { return a.degree > b.degree; });
        for (auto& t : terms) {
            if (!s.terms.empty() && s.terms.back().degree == t.degree)
                s.terms.back().coeff += t.coeff;
            else
                s.terms.push_back(std::move(t));
            if (s.terms.back().coeff == 0) s.terms.pop_back();
        }
        return s;
    }
    /// Monomial integrand from ascending coefficients c_0, c_1, ...
    static IntegrandSpec from_coefficients(const std::vector<Rational>& ascending) {
        std::vector<MonomialTerm> terms;
        for (std::size_t k = 0; k < ascending.size(); ++k)
            if (ascending[k] != 0) terms.push_back({ascending[k], static_cast<unsigned>(k)});
        return monomial(std::move(terms));
    }
    static IntegrandSpec falling(unsigned n, Rational lambda) {
        IntegrandSpec s;
        s.basis = Basis::falling;
        s.n = n;
        s.lambda = std::move(lambda);
        return s;
    }

    unsigned degree() const {
        if (basis == Basis::falling) return n;
        return terms.empty() ? 0 : terms.front().degree;
    }

    /// Ascending coefficients in x.
    std::vector<Rational> coefficients() const {
        if (basis == Basis::falling) {
            // x (x - lambda) ... (x - (n-1) lambda) expanded in x
            std::vector<Rational> c{Rational(1)};
            for (unsigned i = 0; i < n; ++i) {
                Rational root = lambda * i;
                std::vector<Rational> next(c.size() + 1);
                for (std::size_t k = 0; k < c.size(); ++k) {
                    next[k + 1] += c[k];
                    next[k] -= root * c[k];
                }
                c = std::move(next);
            }
            return c;
        }
        std::vector<Rational> c(degree() + 1);
        for (const auto& t : terms) c[t.degree] += t.coeff;
        return c;
    }

    friend bool operator==(const IntegrandSpec&, const IntegrandSpec&) = default;
};

/// Textual form accepted by the integrand parser: "poly:x^2-1/2*x" or "ff:n=2,lambda=1".
inline std::string to_string(const IntegrandSpec& f) {
    if (f.basis == IntegrandSpec::Basis::falling) return "ff:n=" + std::to_string(f.n) + ",lambda=" + to_string(f.lambda);
    std::string out = "poly:";
    if (f.terms.empty()) return out + "0";
    bool first = true;
    for (const auto& t : f.terms) {
        Rational mag = t.coeff < 0 ? Rational(-t.coeff) : t.coeff;
        if (t.coeff < 0)
            out += "-";
        else if (!first)
            out += "+";
        first = false;
        if (t.degree == 0) {
            out += mag.str();
            continue;
        }
        if (mag != 1) out += mag.str() + "*";
        out += "x";
        if (t.degree > 1) out += "^" + std::to_string(t.degree);
    }
    return out;
}

/// sum_{x=0}^{m-1} x^k for k = 0..max_k, via m^{k+1} = sum_{j<=k} C(k+1,j) P_j(m).
inline std::vector<BigInt> power_sums(const BigInt& m, unsigned max_k) {
    std::vector<BigInt> sums;
    sums.reserve(max_k + 1);
    BigInt m_pow = m;
    for (unsigned k = 0; k <= max_k; ++k) {
        BigInt acc = m_pow; // m^{k+1}
        for (unsigned j = 0; j < k; ++j) acc -= binomial(k + 1, j) * sums[j];
        sums.push_back(acc / (k + 1));
        m_pow *= m;
    }
    return sums;
}

/// sum_{x=0}^{m-1} (-1)^x x^k for odd m, via
/// 2 A_k = m^k + [k = 0] - sum_{j<k} C(k,j) A_j.
inline std::vector<BigInt> alternating_power_sums(const BigInt& m, unsigned max_k) {
    if (m % 2 == 0) throw std::invalid_argument("alternating power sums need an odd number of terms");
    std::vector<BigInt> sums;
    sums.reserve(max_k + 1);
    BigInt m_pow = 1;
    for (unsigned k = 0; k <= max_k; ++k) {
        BigInt acc = m_pow + (k == 0 ? 1 : 0);
        for (unsigned j = 0; j < k; ++j) acc -= binomial(k, j) * sums[j];
        sums.push_back(acc / 2);
        m_pow *= m;
    }
    return sums;
}

namespace detail {

inline void check_integrand(const IntegrandSpec& f, const PadicContext& ctx, unsigned level) {
    if (level < 1) throw std::invalid_argument("level N must be at least 1");
    if (f.degree() > max_integrand_degree)
        throw std::invalid_argument("integrand degree " + std::to_string(f.degree()) + " exceeds the cap of " +
                                    std::to_string(max_integrand_degree));
    if (f.basis == IntegrandSpec::Basis::falling) {
        Valuation v = p_valuation(f.lambda, ctx.prime());
        if (!v.is_infinite() && v.value() < 0)
            throw std::invalid_argument("lambda = " + to_string(f.lambda) + " is not a " +
                                        std::to_string(ctx.prime()) + "-adic integer");
    }
}

inline BigInt prime_power(std::int64_t p, unsigned level) { return boost::multiprecision::pow(BigInt(p), level); }

} // namespace detail

/// S_N = p^{-N} sum_{x<p^N} f(x), exact.
inline Rational volkenborn_riemann_sum(const std::vector<Rational>& coeffs, std::int64_t p, unsigned level) {
    BigInt m = detail::prime_power(p, level);
    auto sums = power_sums(m, coeffs.empty() ? 0u : static_cast<unsigned>(coeffs.size() - 1));
    Rational total = 0;
    for (std::size_t k = 0; k < coeffs.size(); ++k) total += coeffs[k] * Rational(sums[k]);
    return total / Rational(m);
}

/// T_N = sum_{x<p^N} (-1)^x f(x), exact.
inline Rational fermionic_riemann_sum(const std::vector<Rational>& coeffs, std::int64_t p, unsigned level) {
    BigInt m = detail::prime_power(p, level);
    auto sums = alternating_power_sums(m, coeffs.empty() ? 0u : static_cast<unsigned>(coeffs.size() - 1));
    Rational total = 0;
    for (std::size_t k = 0; k < coeffs.size(); ++k) total += coeffs[k] * Rational(sums[k]);
    return total;
}

inline Rational riemann_sum(const IntegrandSpec& f, Measure measure, const PadicContext& ctx, unsigned level) {
    detail::check_integrand(f, ctx, level);
    return measure == Measure::volkenborn ? volkenborn_riemann_sum(f.coefficients(), ctx.prime(), level)
                                          : fermionic_riemann_sum(f.coefficients(), ctx.prime(), level);
}

/// Level-N approximation of the Volkenborn integral of f.
inline PadicNumber volkenborn_sum(const IntegrandSpec& f, const PadicContext& ctx, unsigned level) {
    return exact_to_padic(riemann_sum(f, Measure::volkenborn, ctx, level), ctx);
}

/// Level-N approximation of the fermionic integral of f.
inline PadicNumber fermionic_sum(const IntegrandSpec& f, const PadicContext& ctx, unsigned level) {
    return exact_to_padic(riemann_sum(f, Measure::fermionic, ctx, level), ctx);
}

/// Closed-form integral: x^k integrates to B_k (Volkenborn) or E_k (fermionic),
/// and (x)_{n,lambda} to beta_{n,lambda} or E_{n,lambda} at the given lambda.
inline Rational exact_integral(const IntegrandSpec& f, Measure measure) {
    if (f.basis == IntegrandSpec::Basis::falling) {
        NumberTable t = measure == Measure::volkenborn ? degenerate_bernoulli(f.n) : degenerate_euler(f.n);
        return lp_eval(t.poly(f.n), f.lambda);
    }
    NumberTable t = classical_numbers(measure == Measure::volkenborn ? NumberKind::bernoulli : NumberKind::euler,
                                      f.degree());
    Rational total = 0;
    for (const auto& term : f.terms) total += term.coeff * t.rational(term.degree);
    return total;
}

namespace detail {

// coefficients of f(x + 1)
inline std::vector<Rational> shifted_by_one(const std::vector<Rational>& c) {
    std::vector<Rational> out(c.size());
    for (std::size_t k = 0; k < c.size(); ++k)
        for (std::size_t j = 0; j <= k; ++j)
            out[j] += c[k] * Rational(binomial(static_cast<unsigned>(k), static_cast<unsigned>(j)));
    return out;
}

inline Rational evaluate(const std::vector<Rational>& c, const Rational& x) {
    Rational acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

} // namespace detail

/// Finite-level check of  I(f(x+1)) - I(f(x)) = f'(0)  (Volkenborn) and
/// I_{-1}(f(x+1)) + I_{-1}(f(x)) = 2 f(0)  (fermionic).
struct ShiftEquationReport {
    std::int64_t prime;
    unsigned level;
    // Volkenborn side
    Rational volkenborn_difference;  // S_N(f(.+1)) - S_N(f)
    Rational volkenborn_telescoped;  // (f(p^N) - f(0)) / p^N
    Rational derivative_at_zero;     // f'(0)
    Valuation volkenborn_residual_valuation;
    Rational volkenborn_distance;
    // fermionic side
    Rational fermionic_sum;          // T_N(f(.+1)) + T_N(f)
    Rational fermionic_closed_form;  // f(0) + f(p^N)
    Rational twice_value_at_zero;    // 2 f(0)
    Valuation fermionic_residual_valuation;
    Rational fermionic_distance;

    bool telescoping_exact() const {
        return volkenborn_difference == volkenborn_telescoped && fermionic_sum == fermionic_closed_form;
    }
};

inline ShiftEquationReport verify_shift_equation(const IntegrandSpec& f, const PadicContext& ctx, unsigned level) {
    detail::check_integrand(f, ctx, level);
    const auto c = f.coefficients();
    const auto shifted = detail::shifted_by_one(c);
    const std::int64_t p = ctx.prime();
    const Rational m(detail::prime_power(p, level));

    ShiftEquationReport r{};
    r.prime = p;
    r.level = level;
    r.volkenborn_difference = volkenborn_riemann_sum(shifted, p, level) - volkenborn_riemann_sum(c, p, level);
    r.volkenborn_telescoped = (detail::evaluate(c, m) - c[0]) / m;
    r.derivative_at_zero = c.size() > 1 ? c[1] : Rational(0);
    auto vd = exact_to_padic(r.volkenborn_difference, ctx), d0 = exact_to_padic(r.derivative_at_zero, ctx);
    r.volkenborn_residual_valuation = padic_difference_valuation(vd, d0, ctx);
    r.volkenborn_distance = padic_distance(vd, d0, ctx);

    r.fermionic_sum = fermionic_riemann_sum(shifted, p, level) + fermionic_riemann_sum(c, p, level);
    r.fermionic_closed_form = c[0] + detail::evaluate(c, m);
    r.twice_value_at_zero = 2 * c[0];
    auto fs = exact_to_padic(r.fermionic_sum, ctx), f0 = exact_to_padic(r.twice_value_at_zero, ctx);
    r.fermionic_residual_valuation = padic_difference_valuation(fs, f0, ctx);
    r.fermionic_distance = padic_distance(fs, f0, ctx);
    return r;
}

struct ConvergenceRow {
    unsigned level;
    Rational sum;
    Valuation distance_valuation; // infinite: agreement to full precision
    Rational distance;
};

/// Finite-level sums against the closed-form value of one integral.
struct ConvergenceReport {
    std::int64_t prime;
    IntegrandSpec integrand;
    Measure measure;
    Rational exact;
    std::vector<ConvergenceRow> rows;

    bool non_increasing() const {
        for (std::size_t i = 1; i < rows.size(); ++i)
            if (rows[i].distance > rows[i - 1].distance) return false;
        return true;
    }
};

namespace detail {

inline void check_levels(const std::vector<unsigned>& levels) {
    if (levels.empty()) throw std::invalid_argument("at least one level is required");
    for (std::size_t i = 0; i < levels.size(); ++i) {
        if (levels[i] < 1) throw std::invalid_argument("levels must be >= 1");
        if (i > 0 && levels[i] <= levels[i - 1]) throw std::invalid_argument("levels must be strictly ascending");
    }
}

} // namespace detail

/// Riemann sums of an arbitrary polynomial integrand at each level against its exact integral.
inline ConvergenceReport integrate_report(const IntegrandSpec& f, Measure measure, const PadicContext& ctx,
                                          const std::vector<unsigned>& levels) {
    detail::check_levels(levels);
    ConvergenceReport report{ctx.prime(), f, measure, exact_integral(f, measure), {}};
    const PadicNumber target = exact_to_padic(report.exact, ctx);
    for (unsigned level : levels) {
        Rational sum = riemann_sum(f, measure, ctx, level);
        PadicNumber approx = exact_to_padic(sum, ctx);
        Valuation w = padic_difference_valuation(approx, target, ctx);
        report.rows.push_back({level, sum, w, padic_distance(approx, target, ctx)});
    }
    return report;
}

/// Both measures applied to (x)_{n,lambda}: distances to beta_{n,lambda} and E_{n,lambda}.
inline std::pair<ConvergenceReport, ConvergenceReport> convergence_report(unsigned n, const Rational& lambda,
                                                                          const PadicContext& ctx,
                                                                          const std::vector<unsigned>& levels) {
    if (n > 8) throw std::invalid_argument("convergence_report supports n <= 8");
    auto f = IntegrandSpec::falling(n, lambda);
    return {integrate_report(f, Measure::volkenborn, ctx, levels), integrate_report(f, Measure::fermionic, ctx, levels)};
}

} // namespace degen

#endif // DEGEN_PADIC_HPP
