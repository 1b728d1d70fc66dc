#include <gtest/gtest.h>

#include "degen/lambda_poly.hpp"
#include "degen/rational.hpp"
#include "random_values.hpp"

using namespace degen;
using degen::testing::RandomValues;

namespace {

Rational q(int n, int d = 1) { return Rational(n, d); }

} // namespace

TEST(Rational, ParseAndRender) {
    EXPECT_EQ(parse_rational("-3/2"), q(-3, 2));
    EXPECT_EQ(parse_rational("7"), q(7));
    EXPECT_EQ(parse_rational("4/6"), q(2, 3));
    EXPECT_EQ(to_string(parse_rational("-6/4")), "-3/2");
    EXPECT_EQ(to_string(q(0)), "0");
    EXPECT_EQ(to_string(parse_rational("123456789012345678901234567890")), "123456789012345678901234567890");
}

TEST(Rational, RejectsMalformedText) {
    for (const char* bad : {"", "-", "1/", "1/0", "1.5", "+3", "3/-2", "a", "1/2/3", " 1"})
        EXPECT_THROW(parse_rational(bad), parse_error) << bad;
    try {
        parse_rational("12x");
        FAIL();
    } catch (const parse_error& e) {
        EXPECT_EQ(e.column(), 3u);
    }
}

TEST(Rational, CanonicalAndExact) {
    RandomValues rv(11);
    for (int i = 0; i < 200; ++i) {
        Rational a = rv.rational(1000), b = rv.rational(1000);
        EXPECT_EQ((a + b) - b, a);
        Rational c = a * b;
        EXPECT_EQ(parse_rational(to_string(c)), c); // canonical text round-trip
        EXPECT_GE(denominator_of(c), 1);
        EXPECT_EQ(gcd(numerator_of(c), denominator_of(c)) == 1 || c == 0, true);
    }
    EXPECT_EQ(denominator_of(q(0)), 1);
}

TEST(Valuation, Examples) {
    EXPECT_EQ(p_valuation(q(25, 2), 5), Valuation(2));
    EXPECT_EQ(p_valuation(q(1, 6), 3), Valuation(-1));
    // 1377 = 3^4 * 17 and 6 = 2 * 3
    EXPECT_EQ(p_valuation(q(1377, 6), 3), Valuation(3));
    EXPECT_TRUE(p_valuation(q(0), 7).is_infinite());
    EXPECT_GT(Valuation::infinity(), Valuation(1000000));
}

TEST(Valuation, RejectsEvenOrComposite) {
    EXPECT_THROW(p_valuation(q(3), 2), std::invalid_argument);
    EXPECT_THROW(p_valuation(q(3), 9), std::invalid_argument);
    EXPECT_THROW(p_valuation(q(3), 1), std::invalid_argument);
    EXPECT_THROW(p_valuation(q(3), -5), std::invalid_argument);
}

TEST(Valuation, AdditiveOnProducts) {
    RandomValues rv(12);
    for (int p : {3, 5, 7}) {
        for (int i = 0; i < 200; ++i) {
            Rational r = rv.nonzero_rational(500), s = rv.nonzero_rational(500);
            EXPECT_EQ(p_valuation(r * s, p), p_valuation(r, p) + p_valuation(s, p));
        }
    }
}

TEST(Valuation, NormMatchesValuation) {
    EXPECT_EQ(p_norm(q(25, 2), 5), q(1, 25));
    EXPECT_EQ(p_norm(q(1, 6), 3), q(3));
    EXPECT_EQ(p_norm(q(0), 3), q(0));
}

TEST(LambdaPoly, ZeroIsEmpty) {
    LambdaPoly z;
    EXPECT_TRUE(z.is_zero());
    EXPECT_TRUE(z.coefficients().empty());
    EXPECT_EQ(LambdaPoly({q(0), q(0)}), z);
    EXPECT_EQ(LambdaPoly({q(1), q(2), q(0)}).degree(), 1);
    EXPECT_EQ(LambdaPoly::lambda() - LambdaPoly::lambda(), z);
}

TEST(LambdaPoly, Reflect) {
    EXPECT_EQ(lp_reflect(LambdaPoly({q(1, 6), q(1, 2)})), LambdaPoly({q(1, 6), q(-1, 2)}));
    EXPECT_EQ(lp_reflect(LambdaPoly(1)), LambdaPoly(1));
    EXPECT_EQ(lp_reflect(LambdaPoly::monomial(1, 2)), LambdaPoly::monomial(1, 2));

    RandomValues rv(13);
    for (int i = 0; i < 100; ++i) {
        LambdaPoly p = rv.poly(6);
        EXPECT_EQ(lp_reflect(lp_reflect(p)), p);
        EXPECT_EQ(lp_reflect(p).degree(), p.degree());
    }
}

TEST(LambdaPoly, Eval) {
    EXPECT_EQ(lp_eval(LambdaPoly({q(1, 6), q(1, 2)}), 0), q(1, 6));
    EXPECT_EQ(lp_eval(LambdaPoly::monomial(1, 2), 3), q(9));
    // beta_{3,lambda} = -lambda^2 - lambda/2 at lambda = 1
    EXPECT_EQ(lp_eval(LambdaPoly({q(0), q(-1, 2), q(-1)}), 1), q(-3, 2));
}

TEST(LambdaPoly, RingLaws) {
    RandomValues rv(14);
    for (int i = 0; i < 100; ++i) {
        LambdaPoly a = rv.poly(), b = rv.poly(), c = rv.poly();
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ((a + b) - b, a);
        Rational v = rv.rational();
        EXPECT_EQ(lp_eval(a * b, v), lp_eval(a, v) * lp_eval(b, v));
        EXPECT_EQ(lp_eval(a + b, v), lp_eval(a, v) + lp_eval(b, v));
    }
}

TEST(LambdaPoly, TextFormat) {
    EXPECT_EQ(to_string(LambdaPoly({q(1, 6), q(1, 2)})), "1/6 + 1/2*l");
    EXPECT_EQ(to_string(LambdaPoly({q(0), q(-1, 2), q(-1)})), "-1/2*l - l^2");
    EXPECT_EQ(to_string(LambdaPoly()), "0");
    EXPECT_EQ(parse_lambda_poly("1/6 + 1/2*l"), LambdaPoly({q(1, 6), q(1, 2)}));
    EXPECT_EQ(parse_lambda_poly("-l^2 - 1/2*l"), LambdaPoly({q(0), q(-1, 2), q(-1)}));
    EXPECT_EQ(parse_lambda_poly("3*l^2 + 2*l^2"), LambdaPoly::monomial(5, 2));
    EXPECT_EQ(parse_lambda_poly("0"), LambdaPoly());

    RandomValues rv(15);
    for (int i = 0; i < 100; ++i) {
        LambdaPoly p = rv.poly(6);
        EXPECT_EQ(parse_lambda_poly(to_string(p)), p) << to_string(p);
    }
}

TEST(LambdaPoly, ParseErrors) {
    for (const char* bad : {"", "l^", "1/", "1 2", "*l", "2*", "l^x", "1/0*l"})
        EXPECT_THROW(parse_lambda_poly(bad), parse_error) << bad;
    try {
        parse_lambda_poly("1 + 2*k");
        FAIL();
    } catch (const parse_error& e) {
        EXPECT_EQ(e.column(), 7u);
    }
    try {
        parse_lambda_poly("1/0*l");
        FAIL();
    } catch (const parse_error& e) {
        EXPECT_EQ(e.column(), 3u);
    }
}
