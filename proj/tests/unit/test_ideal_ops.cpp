#include <random>

#include "doctest.h"
#include "frobkit/error.hpp"
#include "frobkit/ideal_ops.hpp"
#include "helpers.hpp"
#include "monomial_ideals.hpp"

using namespace frobkit;
using namespace testing;

namespace {

oracle::MonomialIdeal random_monomial_ideal(std::mt19937_64& rng, std::size_t arity, std::size_t max_gens,
                                            std::uint32_t max_exp) {
    oracle::MonomialIdeal I{arity, {}};
    const auto count = 1 + rng() % max_gens;
    for (std::size_t g = 0; g < count; ++g) {
        oracle::Mono m(arity);
        for (auto& e : m) e = static_cast<std::uint32_t>(rng() % (max_exp + 1));
        I.gens.push_back(m);
    }
    return oracle::minimalized(I);
}

}  // namespace

TEST_CASE("sum, product and power") {
    auto R = make_ring(5, {"x", "y"});
    auto v = variables(R);
    auto& x = v[0];
    auto& y = v[1];
    CHECK(ideal_equal(ideal_sum(ideal(R, {x}), ideal(R, {y})), ideal(R, {x, y})));
    auto square = ideal_power(ideal(R, {x, y}), 2);
    CHECK(square.generators().size() == 3);
    CHECK(ideal_equal(square, ideal(R, {x * x, x * y, y * y})));
    CHECK(ideal_product(ideal(R, {x, y}), Ideal::zero(R)).is_zero());
    CHECK(ideal_power(ideal(R, {x}), 0).is_unit());
}

TEST_CASE("bracket powers") {
    auto R = make_ring(3, {"x", "y", "z"});
    auto v = variables(R);
    FrobeniusExponent q3(R->field(), 1);
    auto I = ideal(R, {v[0] + v[1], v[2]});
    CHECK(ideal_equal(bracket_power(I, q3), ideal(R, {pow(v[0], 3) + pow(v[1], 3), pow(v[2], 3)})));
    CHECK(ideal_equal(bracket_power(I, FrobeniusExponent(R->field(), 0)), I));

    auto R2 = make_ring(2, {"x", "y"});
    auto w = variables(R2);
    auto J = bracket_power(ideal(R2, {w[0] * w[0], w[0] * w[1]}), FrobeniusExponent(R2->field(), 1));
    CHECK(ideal_equal(J, ideal(R2, {pow(w[0], 4), pow(w[0], 2) * pow(w[1], 2)})));
}

TEST_CASE("intersection") {
    auto R = make_ring(7, {"x", "y"});
    auto v = variables(R);
    auto& x = v[0];
    auto& y = v[1];
    CHECK(ideal_equal(intersect(ideal(R, {x}), ideal(R, {y})), ideal(R, {x * y})));
    CHECK(ideal_equal(intersect(ideal(R, {x * x, y}), ideal(R, {x})), ideal(R, {x * x, x * y})));
    auto I = ideal(R, {x * x + y, x * y});
    CHECK(ideal_equal(intersect(I, Ideal::unit(R)), I));
    CHECK(intersect(I, Ideal::zero(R)).is_zero());
}

TEST_CASE("colon") {
    auto R = make_ring(7, {"x", "y"});
    auto v = variables(R);
    auto& x = v[0];
    auto& y = v[1];
    CHECK(ideal_equal(colon(ideal(R, {x * x, x * y}), ideal(R, {x})), ideal(R, {x, y})));
    CHECK(ideal_equal(colon(ideal(R, {x * x * y, x * y * y}), ideal(R, {x * y})), ideal(R, {x, y})));
    auto I = ideal(R, {x * x + y, x * y * y});
    CHECK(ideal_equal(colon(I, Ideal::unit(R)), I));
    CHECK(colon(I, Ideal::zero(R)).is_unit());
    // (0 : f) in a domain is zero.
    CHECK(colon(Ideal::zero(R), x).is_zero());
}

TEST_CASE("exact division failure is an internal error") {
    auto R = make_ring(7, {"x", "y"});
    auto v = variables(R);
    try {
        (void)exact_quotient(v[0] + k(R, 1), v[1]);
        FAIL("expected InternalError");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InternalError);
    }
}

TEST_CASE("radical membership") {
    auto R = make_ring(5, {"x", "y"});
    auto v = variables(R);
    auto& x = v[0];
    auto& y = v[1];
    CHECK(radical_member(x, ideal(R, {x * x})));
    CHECK_FALSE(radical_member(y, ideal(R, {x * x})));
    CHECK(radical_member(x * y + k(R, 3), Ideal::unit(R)));
    CHECK(radical_member(x + y, ideal(R, {pow(x, 3), pow(y, 2)})));
    CHECK_FALSE(radical_member(x + k(R, 1), ideal(R, {pow(x, 3), pow(y, 2)})));
}

TEST_CASE("containments on random ideals") {
    std::mt19937_64 rng(71);
    for (std::uint64_t p : {2u, 3u}) {
        auto R = make_ring(p, {"x", "y"});
        for (int trial = 0; trial < 12; ++trial) {
            auto I = ideal(R, {random_poly(rng, R, 3, 3), random_poly(rng, R, 3, 3)});
            auto J = ideal(R, {random_poly(rng, R, 2, 2)});
            FrobeniusExponent q(R->field(), 1);
            auto Iq = bracket_power(I, q);
            auto Ipow = ideal_power(I, q.q());
            for (const auto& g : Iq.generators()) CHECK(Ipow.contains(g));
            auto IJ = colon(I, J);
            auto product = ideal_product(IJ, J);
            for (const auto& g : product.generators()) CHECK(I.contains(g));
            for (const auto& g : I.generators()) CHECK(IJ.contains(g));
            auto cap = intersect(I, J);
            for (const auto& g : cap.generators()) CHECK((I.contains(g) && J.contains(g)));
            // (I:J)^[q] is always inside (I^[q] : J^[q]).
            auto rhs = colon(Iq, bracket_power(J, q));
            auto lhs = bracket_power(IJ, q);
            for (const auto& g : lhs.generators()) CHECK(rhs.contains(g));
        }
    }
}

TEST_CASE("bracket power does not depend on the generating set") {
    std::mt19937_64 rng(83);
    auto R = make_ring(3, {"x", "y", "z"});
    for (int trial = 0; trial < 10; ++trial) {
        auto f = random_poly(rng, R, 3, 2), g = random_poly(rng, R, 3, 2);
        auto h = random_poly(rng, R, 2, 1);
        // (f, g) = (f + h*g, 2*g)
        auto I = ideal(R, {f, g});
        auto J = ideal(R, {f + h * g, g.scaled(2)});
        for (unsigned e : {1u, 2u}) {
            FrobeniusExponent q(R->field(), e);
            CHECK(ideal_equal(bracket_power(I, q), bracket_power(J, q)));
        }
    }
}

TEST_CASE("monomial ideals agree with the combinatorial oracle") {
    std::mt19937_64 rng(97);
    auto R = make_ring(3, {"x", "y", "z"});
    for (int trial = 0; trial < 40; ++trial) {
        auto A = random_monomial_ideal(rng, 3, 3, 3);
        auto B = random_monomial_ideal(rng, 3, 2, 2);
        auto I = oracle::to_ideal(A, R);
        auto J = oracle::to_ideal(B, R);
        CHECK(ideal_equal(colon(I, J), oracle::to_ideal(oracle::colon(A, B), R)));
        CHECK(ideal_equal(intersect(I, J), oracle::to_ideal(oracle::intersect(A, B), R)));
        CHECK(ideal_equal(bracket_power(I, FrobeniusExponent(R->field(), 1)), oracle::to_ideal(oracle::bracket(A, 3), R)));
    }
}
