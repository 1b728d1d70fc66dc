#include <gtest/gtest.h>

#include "degen/padic.hpp"
#include "random_values.hpp"

using namespace degen;
using degen::testing::RandomValues;

namespace {

Rational q(int n, int d = 1) { return Rational(n, d); }

Rational eval(const std::vector<Rational>& c, const Rational& x) {
    Rational acc = 0, pw = 1;
    for (const auto& ck : c) {
        acc += ck * pw;
        pw *= x;
    }
    return acc;
}

// Term-by-term Riemann sums, feasible only for small p^N.
Rational brute_volkenborn(const std::vector<Rational>& c, int p, unsigned level) {
    long m = 1;
    for (unsigned i = 0; i < level; ++i) m *= p;
    Rational total = 0;
    for (long x = 0; x < m; ++x) total += eval(c, Rational(x));
    return total / m;
}

Rational brute_fermionic(const std::vector<Rational>& c, int p, unsigned level) {
    long m = 1;
    for (unsigned i = 0; i < level; ++i) m *= p;
    Rational total = 0;
    for (long x = 0; x < m; ++x) total += (x % 2 == 0 ? 1 : -1) * eval(c, Rational(x));
    return total;
}

IntegrandSpec mono(std::vector<Rational> ascending) { return IntegrandSpec::from_coefficients(ascending); }

} // namespace

TEST(PadicContext, Validates) {
    EXPECT_NO_THROW(PadicContext(3));
    EXPECT_THROW(PadicContext(2), std::invalid_argument);
    EXPECT_THROW(PadicContext(15), std::invalid_argument);
    EXPECT_THROW(PadicContext(5, 0), std::invalid_argument);
    EXPECT_EQ(PadicContext(5, 3).modulus(), 125);
}

TEST(ExactToPadic, Examples) {
    PadicContext ctx(5, 3);
    auto a = exact_to_padic(q(-1, 2), ctx);
    EXPECT_EQ(a.valuation, Valuation(0));
    EXPECT_EQ(a.unit, 62);
    auto b = exact_to_padic(q(1, 6), ctx);
    EXPECT_EQ(b.unit, 21);
    auto c = exact_to_padic(q(25, 2), ctx);
    EXPECT_EQ(c.valuation, Valuation(2));
    EXPECT_EQ(c.unit, 63); // 2 * 63 = 126 = 1 mod 125
    auto d = exact_to_padic(q(7, 15), ctx);
    EXPECT_EQ(d.valuation, Valuation(-1));
    EXPECT_EQ((d.unit * 3) % 125, 7);
    EXPECT_TRUE(exact_to_padic(q(0), ctx).is_zero());
}

TEST(PowerSums, MatchBruteForce) {
    for (long m : {1L, 3L, 9L, 25L, 27L}) {
        auto sums = power_sums(BigInt(m), 12);
        auto alt = alternating_power_sums(BigInt(m), 12);
        for (unsigned k = 0; k <= 12; ++k) {
            BigInt s = 0, a = 0;
            for (long x = 0; x < m; ++x) {
                BigInt pw = boost::multiprecision::pow(BigInt(x), k);
                s += pw;
                a += x % 2 == 0 ? pw : BigInt(-pw);
            }
            EXPECT_EQ(sums[k], s) << "m=" << m << " k=" << k;
            EXPECT_EQ(alt[k], a) << "m=" << m << " k=" << k;
        }
    }
    EXPECT_THROW(alternating_power_sums(BigInt(4), 2), std::invalid_argument);
}

TEST(VolkenbornSum, Examples) {
    PadicContext c5(5), c3(3);
    EXPECT_EQ(riemann_sum(mono({0, 1}), Measure::volkenborn, c5, 2), q(12));
    EXPECT_EQ(volkenborn_sum(mono({0, 1}), c5, 2).valuation, Valuation(0));
    for (unsigned n = 1; n <= 6; ++n) EXPECT_EQ(riemann_sum(mono({1}), Measure::volkenborn, c3, n), q(1));
    EXPECT_EQ(riemann_sum(mono({0, 0, 1}), Measure::volkenborn, c3, 3), q(689, 3));
    EXPECT_EQ(volkenborn_sum(mono({0, 0, 1}), c3, 3).valuation, Valuation(-1));
}

TEST(FermionicSum, Examples) {
    PadicContext c3(3);
    for (unsigned n = 1; n <= 8; ++n) EXPECT_EQ(riemann_sum(mono({1}), Measure::fermionic, c3, n), q(1));
    EXPECT_EQ(riemann_sum(mono({0, 1}), Measure::fermionic, c3, 2), q(4));
    EXPECT_EQ(riemann_sum(mono({0, 0, 1}), Measure::fermionic, c3, 2), q(36));
}

TEST(RiemannSums, MatchBruteForce) {
    RandomValues rv(51);
    for (int i = 0; i < 25; ++i) {
        int p = i % 2 == 0 ? 3 : 5;
        unsigned level = static_cast<unsigned>(rv.integer(1, p == 3 ? 4 : 3));
        std::vector<Rational> c;
        int deg = rv.integer(0, 8);
        for (int k = 0; k <= deg; ++k) c.push_back(rv.rational(12));
        PadicContext ctx(p);
        EXPECT_EQ(riemann_sum(mono(c), Measure::volkenborn, ctx, level), brute_volkenborn(c, p, level));
        EXPECT_EQ(riemann_sum(mono(c), Measure::fermionic, ctx, level), brute_fermionic(c, p, level));
    }
    // falling basis: (x)_{2,1} = x^2 - x at p = 5
    EXPECT_EQ(riemann_sum(IntegrandSpec::falling(2, 1), Measure::volkenborn, PadicContext(5), 3), q(5084));
}

TEST(RiemannSums, Errors) {
    PadicContext ctx(5);
    std::vector<Rational> big(14, q(1));
    EXPECT_THROW(riemann_sum(mono(big), Measure::volkenborn, ctx, 2), std::invalid_argument);
    EXPECT_THROW(riemann_sum(IntegrandSpec::falling(2, q(1, 5)), Measure::volkenborn, ctx, 2), std::invalid_argument);
    EXPECT_NO_THROW(riemann_sum(IntegrandSpec::falling(2, q(5, 3)), Measure::volkenborn, ctx, 2));
    EXPECT_THROW(riemann_sum(mono({1}), Measure::volkenborn, ctx, 0), std::invalid_argument);
}

TEST(Distance, Examples) {
    PadicContext c5(5), c3(3);
    auto s2 = volkenborn_sum(mono({0, 1}), c5, 2);
    EXPECT_EQ(padic_distance(s2, exact_to_padic(q(-1, 2), c5), c5), q(1, 25));
    EXPECT_EQ(padic_distance(s2, s2, c5), q(0));
    auto t2 = fermionic_sum(mono({0, 0, 1}), c3, 2);
    EXPECT_EQ(padic_distance(t2, exact_to_padic(q(0), c3), c3), q(1, 9));
    EXPECT_EQ(distance_string(Valuation(2), 3), "3^-2");
    EXPECT_EQ(distance_string(Valuation(-1), 3), "3^1");
    EXPECT_EQ(distance_string(Valuation::infinity(), 3), "0");
}

TEST(Distance, AgreesWithExactNormWithinPrecision) {
    RandomValues rv(52);
    PadicContext ctx(7, 20);
    for (int i = 0; i < 200; ++i) {
        Rational a = rv.rational(3000), b = rv.rational(3000);
        EXPECT_EQ(padic_distance(exact_to_padic(a, ctx), exact_to_padic(b, ctx), ctx), p_norm(a - b, 7));
    }
}

TEST(Distance, Ultrametric) {
    RandomValues rv(53);
    for (int p : {3, 5}) {
        PadicContext ctx(p, 16);
        for (int i = 0; i < 200; ++i) {
            auto a = exact_to_padic(rv.rational(500), ctx), b = exact_to_padic(rv.rational(500), ctx),
                 c = exact_to_padic(rv.rational(500), ctx);
            EXPECT_LE(padic_distance(a, c, ctx), std::max(padic_distance(a, b, ctx), padic_distance(b, c, ctx)));
        }
    }
}

TEST(ShiftEquation, Examples) {
    PadicContext c5(5), c3(3);
    for (unsigned n = 1; n <= 5; ++n) {
        auto r = verify_shift_equation(mono({0, 1}), c5, n);
        EXPECT_TRUE(r.telescoping_exact());
        EXPECT_EQ(r.volkenborn_difference, q(1));
        EXPECT_EQ(r.volkenborn_distance, q(0));
        // fermionic: T_N(x+1) + T_N(x) = p^N, 2 f(0) = 0
        EXPECT_EQ(r.fermionic_sum, Rational(boost::multiprecision::pow(BigInt(5), n)));
        EXPECT_EQ(r.fermionic_distance, rational_pow(5, -static_cast<long>(n)));

        auto s = verify_shift_equation(mono({0, 0, 1}), c3, n);
        EXPECT_EQ(s.volkenborn_difference, Rational(boost::multiprecision::pow(BigInt(3), n)));
        EXPECT_EQ(s.volkenborn_distance, rational_pow(3, -static_cast<long>(n)));
    }
}

TEST(ShiftEquation, TelescopingIdentities) {
    RandomValues rv(54);
    for (int i = 0; i < 30; ++i) {
        int p = i % 2 == 0 ? 3 : 7;
        unsigned level = static_cast<unsigned>(rv.integer(1, 8));
        std::vector<Rational> c;
        int deg = rv.integer(0, 6);
        for (int k = 0; k <= deg; ++k) c.push_back(rv.integer(-20, 20));
        auto r = verify_shift_equation(mono(c), PadicContext(p), level);
        EXPECT_TRUE(r.telescoping_exact());
        // integer coefficients: both residuals have valuation >= N
        EXPECT_LE(r.volkenborn_distance, rational_pow(p, -static_cast<long>(level)));
        EXPECT_LE(r.fermionic_distance, rational_pow(p, -static_cast<long>(level)));
    }
}

TEST(Convergence, Examples) {
    PadicContext c5(5), c3(3);
    std::vector<unsigned> levels{1, 2, 3, 4, 5};
    auto [v0, f0] = convergence_report(0, q(2), c5, levels);
    for (const auto& row : v0.rows) EXPECT_EQ(row.distance, q(0));
    for (const auto& row : f0.rows) EXPECT_EQ(row.distance, q(0));

    for (auto lam : {q(0), q(1), q(3, 2)}) {
        auto [v1, f1] = convergence_report(1, lam, c5, levels);
        EXPECT_EQ(v1.exact, q(-1, 2));
        for (const auto& row : v1.rows) EXPECT_EQ(row.distance, rational_pow(5, -static_cast<long>(row.level)));
    }

    auto [v2, f2] = convergence_report(2, q(1), c5, {1, 2, 3, 4});
    EXPECT_EQ(v2.exact, q(2, 3));
    EXPECT_EQ(v2.rows[0].sum, q(4));
    EXPECT_EQ(v2.rows[1].sum, q(184));
    EXPECT_TRUE(v2.non_increasing());
    EXPECT_LE(v2.rows.back().distance, q(1, 25));
    EXPECT_EQ(f2.exact, q(1, 2)); // E_{2,lambda} = lambda/2 at lambda = 1

    EXPECT_THROW(convergence_report(9, q(1), c5, levels), std::invalid_argument);
    EXPECT_THROW(convergence_report(2, q(1, 5), c5, levels), std::invalid_argument);
    EXPECT_THROW(convergence_report(2, q(1), c5, {3, 2}), std::invalid_argument);
}

TEST(ExactIntegral, MonomialAndFalling) {
    EXPECT_EQ(exact_integral(mono({0, 0, 1}), Measure::volkenborn), q(1, 6));
    EXPECT_EQ(exact_integral(mono({0, 0, 1}), Measure::fermionic), q(0));
    EXPECT_EQ(exact_integral(mono({0, 0, 0, 1}), Measure::fermionic), q(1, 4));
    EXPECT_EQ(exact_integral(IntegrandSpec::falling(3, 1), Measure::volkenborn), q(-3, 2));
}

TEST(IntegrandSpec, NormalizesAndExpands) {
    auto f = IntegrandSpec::monomial({{q(1), 1}, {q(2), 3}, {q(-1), 1}, {q(5), 0}});
    ASSERT_EQ(f.terms.size(), 2u);
    EXPECT_EQ(f.terms[0], (MonomialTerm{q(2), 3}));
    EXPECT_EQ(f.terms[1], (MonomialTerm{q(5), 0}));
    EXPECT_EQ(f.degree(), 3u);
    EXPECT_EQ(IntegrandSpec::falling(3, q(1, 2)).coefficients(),
              (std::vector<Rational>{q(0), q(1, 2), q(-3, 2), q(1)}));
    EXPECT_EQ(to_string(f), "poly:2*x^3+5");
    EXPECT_EQ(to_string(IntegrandSpec::falling(2, q(-1, 3))), "ff:n=2,lambda=-1/3");
}
