#ifndef DEGEN_TESTS_RANDOM_VALUES_HPP
#define DEGEN_TESTS_RANDOM_VALUES_HPP

#include <random>
#include <vector>

#include "degen/lambda_poly.hpp"
#include "degen/power_series.hpp"
#include "degen/rational.hpp"

namespace degen::testing {

// Seeded generators for property tests; every run sees the same values.
class RandomValues {
public:
    explicit RandomValues(unsigned seed) : gen_(seed) {}

    Rational rational(int span = 20) {
        std::uniform_int_distribution<int> num(-span, span), den(1, span);
        return Rational(num(gen_), den(gen_));
    }
    Rational nonzero_rational(int span = 20) {
        Rational r;
        do r = rational(span);
        while (r == 0);
        return r;
    }
    LambdaPoly poly(int max_degree = 4) {
        std::uniform_int_distribution<int> deg(-1, max_degree);
        int d = deg(gen_);
        std::vector<Rational> c;
        for (int i = 0; i <= d; ++i) c.push_back(rational(9));
        return LambdaPoly(std::move(c));
    }
    Series<LambdaPoly> series(std::size_t order) {
        std::vector<LambdaPoly> v;
        for (std::size_t i = 0; i <= order; ++i) v.push_back(poly(3));
        return Series<LambdaPoly>(std::move(v));
    }
    Series<LambdaPoly> unit_series(std::size_t order) {
        std::vector<LambdaPoly> v;
        v.emplace_back(nonzero_rational(9));
        for (std::size_t i = 1; i <= order; ++i) v.push_back(poly(3));
        return Series<LambdaPoly>(std::move(v));
    }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }

private:
    std::mt19937 gen_;
};

} // namespace degen::testing

#endif // DEGEN_TESTS_RANDOM_VALUES_HPP
