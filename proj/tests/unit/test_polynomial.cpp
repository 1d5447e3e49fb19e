#include <random>

#include "doctest.h"
#include "frobkit/error.hpp"
#include "frobkit/polynomial.hpp"
#include "helpers.hpp"

using namespace frobkit;
using namespace testing;

TEST_CASE("addition in characteristic 2 cancels") {
    auto R = make_ring(2, {"x", "y"});
    auto v = variables(R);
    auto f = v[0] + v[1];
    CHECK((f + f).is_zero());
}

TEST_CASE("difference of squares over GF(3)") {
    auto R = make_ring(3, {"x"});
    auto x = variables(R)[0];
    auto product = (x + k(R, 1)) * (x - k(R, 1));
    CHECK(product == x * x + k(R, 2));
    CHECK(to_string(product) == "x^2 + 2");
}

TEST_CASE("scaling by zero") {
    auto R = make_ring(5, {"x", "y"});
    auto v = variables(R);
    CHECK((v[0] * v[1] + k(R, 3)).scaled(0).is_zero());
}

TEST_CASE("terms are kept in decreasing order") {
    auto R = make_ring(7, {"x", "y", "z"});
    auto v = variables(R);
    auto f = v[2] * v[2] + v[0] * v[1] + k(R, 3) + v[0] * v[1] * v[2];
    CHECK(to_string(f) == "x*y*z + x*y + z^2 + 3");
    auto lexR = R->with_order(MonomialOrder::standard(OrderKind::lex, 3));
    CHECK(to_string(f.reordered(lexR)) == "x*y*z + x*y + z^2 + 3");
    CHECK(f.reordered(lexR) == f);
    CHECK_THROWS_AS((void)(f + f.reordered(lexR)), Error);
}

TEST_CASE("ring mismatch is reported") {
    auto R = make_ring(7, {"x", "y"});
    auto S = make_ring(7, {"x", "z"});
    CHECK_THROWS_AS((void)(variables(R)[0] * variables(S)[0]), Error);
}

TEST_CASE("Frobenius by freshman's dream") {
    auto R2 = make_ring(2, {"x", "y"});
    auto v2 = variables(R2);
    CHECK(frobenius_pow(v2[0] + v2[1], FrobeniusExponent(R2->field(), 1)) == v2[0] * v2[0] + v2[1] * v2[1]);
    auto f = v2[0] * v2[1] + k(R2, 1);
    CHECK(frobenius_pow(f, FrobeniusExponent(R2->field(), 0)) == f);

    auto R3 = make_ring(3, {"x", "y"});
    auto v3 = variables(R3);
    auto g = v3[0] + k(R3, 2) * v3[1];
    CHECK(to_string(frobenius_pow(g, FrobeniusExponent(R3->field(), 1))) == "x^3 + 2*y^3");
    CHECK_THROWS_AS((void)frobenius_pow(g, FrobeniusExponent(R2->field(), 1)), Error);
}

TEST_CASE("exponent overflow is detected") {
    auto R = make_ring(2, {"x"});
    auto x = variables(R)[0];
    auto big = frobenius_pow(x, FrobeniusExponent(R->field(), 30));
    CHECK_THROWS_AS((void)(big * big * big * big), Error);
}

TEST_CASE("Frobenius agrees with repeated multiplication and is a ring map") {
    std::mt19937_64 rng(5);
    for (std::uint64_t p : {2u, 3u, 5u}) {
        auto R = make_ring(p, {"x", "y", "z"});
        for (unsigned e = 0; e <= 2; ++e) {
            FrobeniusExponent q(R->field(), e);
            if (q.q() > 9) continue;
            for (int trial = 0; trial < 15; ++trial) {
                auto f = random_poly(rng, R, 4, 3);
                auto g = random_poly(rng, R, 4, 3);
                CHECK(frobenius_pow(f, q) == pow(f, q.q()));
                CHECK(frobenius_pow(f * g, q) == frobenius_pow(f, q) * frobenius_pow(g, q));
                CHECK(frobenius_pow(f + g, q) == frobenius_pow(f, q) + frobenius_pow(g, q));
            }
        }
    }
}

TEST_CASE("ring axioms on random samples") {
    std::mt19937_64 rng(11);
    auto R = make_ring(7, {"x", "y", "z"});
    for (int trial = 0; trial < 50; ++trial) {
        auto f = random_poly(rng, R, 4, 3), g = random_poly(rng, R, 4, 3), h = random_poly(rng, R, 4, 3);
        CHECK((f + g) + h == f + (g + h));
        CHECK((f * g) * h == f * (g * h));
        CHECK(f * (g + h) == f * g + f * h);
        CHECK(f * g == g * f);
        CHECK(f + g == g + f);
        CHECK((f - f).is_zero());
        CHECK(f * k(R, 1) == f);
    }
}

TEST_CASE("subtract_multiple matches the naive expression") {
    std::mt19937_64 rng(23);
    auto R = make_ring(5, {"x", "y"});
    for (int trial = 0; trial < 50; ++trial) {
        auto f = random_poly(rng, R, 5, 4), g = random_poly(rng, R, 5, 4);
        auto m = Monomial({std::uint32_t(rng() % 3), std::uint32_t(rng() % 3)});
        auto c = static_cast<std::uint32_t>(rng() % 5);
        auto expected = f - g.times_term(m, c);
        f.subtract_multiple(c, m, g);
        CHECK(f == expected);
    }
}
