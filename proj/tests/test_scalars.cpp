#include <doctest.h>

#include <random>
#include <vector>

#include "qsh/scalars.hpp"

using namespace qsh;

namespace {

RationalFunction rf(const std::string& text) {
    return parse_rational_function(text);
}

// independent convolution oracle for polynomial products
std::vector<long> convolve(const std::vector<long>& a, const std::vector<long>& b) {
    std::vector<long> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

RationalFunction from_coeffs(const std::vector<long>& coeffs) {
    std::vector<Rational> c;
    for (long x : coeffs) c.emplace_back(x);
    return RationalFunction(Polynomial(std::move(c)));
}

// ordinary binomials via the Pascal triangle
long pascal(int n, int k) {
    std::vector<std::vector<long>> tri(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        tri[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(i) + 1, 1);
        for (int j = 1; j < i; ++j)
            tri[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                tri[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] +
                tri[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
    }
    return tri[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

struct RfGen {
    std::mt19937 rng{20240215};

    Polynomial polynomial(bool nonzero = false) {
        std::uniform_int_distribution<int> deg_dist(0, 4);
        std::uniform_int_distribution<long> num_dist(-3, 3);
        std::uniform_int_distribution<long> den_dist(1, 3);
        for (;;) {
            std::vector<Rational> c(static_cast<std::size_t>(deg_dist(rng)) + 1);
            for (auto& x : c) x = make_rational(num_dist(rng), den_dist(rng));
            Polynomial p(std::move(c));
            if (!nonzero || !p.is_zero()) return p;
        }
    }

    RationalFunction value() { return RationalFunction(polynomial(), polynomial(true)); }
};

}  // namespace

TEST_SUITE("scalars") {

TEST_CASE("quantum integers") {
    CHECK(quantum_int(0).is_zero());
    CHECK(quantum_int(1).is_one());
    CHECK(quantum_int(3) == rf("1 + q + q^2"));
}

TEST_CASE("quantum factorials against the convolution oracle") {
    CHECK(quantum_factorial(0).is_one());
    CHECK(quantum_factorial(2) == rf("1 + q"));
    // 3!_q = (1+q)(1+q+q^2), expanded independently
    auto expected = convolve({1, 1}, {1, 1, 1});
    CHECK(expected == std::vector<long>{1, 2, 2, 1});
    CHECK(quantum_factorial(3) == from_coeffs(expected));
    CHECK(quantum_factorial(4) == from_coeffs(convolve(convolve({1, 1}, {1, 1, 1}), {1, 1, 1, 1})));
}

TEST_CASE("quantum binomials") {
    for (int n = 0; n <= 6; ++n) CHECK(quantum_binomial(n, 0).is_one());
    CHECK(quantum_binomial(2, 1) == rf("1 + q"));
    CHECK(quantum_binomial(4, 2) == rf("1 + q + 2*q^2 + q^3 + q^4"));
    CHECK(quantum_binomial(4, 2).is_polynomial());
    CHECK_THROWS_AS(quantum_binomial(2, 3), std::domain_error);
}

TEST_CASE("q-Pascal identity up to n = 12") {
    for (int n = 1; n <= 12; ++n)
        for (int k = 1; k <= n; ++k) {
            RationalFunction second =
                k <= n - 1 ? q_power(static_cast<unsigned>(k)) * quantum_binomial(n - 1, k)
                           : RationalFunction(0);
            CHECK(quantum_binomial(n, k) == quantum_binomial(n - 1, k - 1) + second);
        }
}

TEST_CASE("classical limit at q = 1 matches the Pascal triangle") {
    for (int n = 0; n <= 12; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(specialize(quantum_binomial(n, k), Rational(1)) == Rational(pascal(n, k)));
}

TEST_CASE("specialize") {
    CHECK(specialize(rf("1 + q"), Rational(1)) == Rational(2));
    CHECK(specialize(quantum_binomial(2, 1), Rational(1)) == Rational(2));
    CHECK(specialize(rf("(q^2 - 1)/(q - 1)"), Rational(5)) == Rational(6));
    CHECK_THROWS_WITH_AS(specialize(rf("1/(q - 1)"), Rational(1)),
                         doctest::Contains("q - 1"), std::domain_error);
}

TEST_CASE("normalization makes equality structural") {
    // (q^2 - 1)/(q - 1) reduces to q + 1
    RationalFunction a = rf("(q^2 - 1)/(q - 1)");
    CHECK(a == rf("q + 1"));
    CHECK(a.is_polynomial());
    // denominator is made monic
    RationalFunction b = rf("1/(2*q - 2)");
    CHECK(b.den() == Polynomial(std::vector<Rational>{Rational(-1), Rational(1)}));
    CHECK(b.num() == Polynomial(make_rational(1, 2)));
}

TEST_CASE("field axioms on randomized rational functions") {
    RfGen gen;
    for (int trial = 0; trial < 60; ++trial) {
        RationalFunction a = gen.value(), b = gen.value(), c = gen.value();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a - a).is_zero());
        if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
    }
}

TEST_CASE("parser handles the documented grammar") {
    CHECK(rf("(1/2)*q^2 - q + 3") ==
          RationalFunction(Polynomial(std::vector<Rational>{Rational(3), Rational(-1), make_rational(1, 2)})));
    CHECK(rf("q^0").is_one());
    CHECK(rf("-q") == -RationalFunction::variable());
    CHECK(rf("3/4") == RationalFunction(make_rational(3, 4)));
    CHECK(rf("q*q*q") == rf("q^3"));
    CHECK(rf("(1+q)^2") == rf("1 + 2*q + q^2"));
    CHECK_THROWS_AS(rf("q +"), parse_error);
    CHECK_THROWS_AS(rf("x"), parse_error);
    CHECK_THROWS_AS(rf("1/(q - q)"), parse_error);
    CHECK_THROWS_AS(rf("(q"), parse_error);
}

TEST_CASE("render / parse round trip") {
    RfGen gen;
    for (int trial = 0; trial < 80; ++trial) {
        RationalFunction a = gen.value();
        CHECK(parse_rational_function(a.str()) == a);
    }
    CHECK(rf("1 + q").str() == "q + 1");
    CHECK(RationalFunction(Polynomial(std::vector<Rational>{Rational(3), Rational(-1), make_rational(1, 2)}))
              .str() == "(1/2)*q^2 - q + 3");
}

}  // TEST_SUITE
