#include <random>

#include "doctest.h"
#include "frobkit/error.hpp"
#include "frobkit/quotient_ring.hpp"
#include "helpers.hpp"

using namespace frobkit;
using namespace testing;

namespace {

QuotientPtr cone() {
    auto S = make_ring(2, {"x", "y", "z"});
    auto v = variables(S);
    return RingPresentation::present(S, {v[0] * v[1] - v[2] * v[2]});
}

}  // namespace

TEST_CASE("presentations") {
    auto R = present_ring(2, {"x", "y"});
    CHECK(R->is_polynomial_ring());
    CHECK(R->describe() == "GF(2)[x, y]");

    auto C = cone();
    CHECK_FALSE(C->is_polynomial_ring());
    CHECK(C->describe() == "GF(2)[x, y, z]/(x*y + z^2)");

    auto S = make_ring(2, {"x", "y"});
    CHECK_THROWS_AS(RingPresentation::present(S, {k(S, 1)}), Error);
    try {
        RingPresentation::present(S, {variables(S)[0], variables(S)[0] + k(S, 1)});
        FAIL("expected UnitDefiningIdeal");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::UnitDefiningIdeal);
    }
    try {
        present_ring(4, {"x"});
        FAIL("expected NonPrimeCharacteristic");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NonPrimeCharacteristic);
    }
}

TEST_CASE("normal forms modulo the defining ideal") {
    auto C = cone();
    auto v = variables(C->ambient());
    CHECK(r_normal_form(v[0] * v[1], C).repr() == v[2] * v[2]);
    CHECK(r_normal_form(Polynomial(C->ambient()), C).is_zero());
    CHECK(r_normal_form(v[0] * v[1] - v[2] * v[2], C).is_zero());

    auto R = present_ring(5, {"x", "y"});
    auto w = variables(R->ambient());
    auto f = w[0] * w[0] + k(R->ambient(), 3) * w[1];
    CHECK(r_normal_form(f, R).repr() == f);
}

TEST_CASE("ideal operations in the quotient") {
    auto R = present_ring(3, {"x", "y"});
    auto w = variables(R->ambient());
    CHECK(r_colon(RIdeal(R, {w[0]}), RIdeal(R, {w[1]})) == RIdeal(R, {w[0]}));

    auto C = cone();
    auto v = variables(C->ambient());
    auto xz = RIdeal(C, {v[0], v[2]});
    CHECK(r_colon(RIdeal(C, {v[0]}), RIdeal(C, {v[2]})) == xz);
    CHECK(to_string(r_colon(RIdeal(C, {v[0]}), RIdeal(C, {v[2]}))) == "ideal(z, x)");
    CHECK(r_bracket_power(xz, FrobeniusExponent(C->field(), 0)) == xz);

    auto m = RIdeal::maximal(C);
    CHECK(r_sum(RIdeal(C, {v[0]}), RIdeal(C, {v[1], v[2]})) == m);
    CHECK(r_product(m, m) == r_power(m, 2));
    CHECK(r_power(m, 0).is_unit());
    CHECK(RIdeal(C, {v[0] * v[1] + v[2] * v[2]}).is_zero());
    CHECK(RIdeal::zero(C).is_zero());
    CHECK(r_colon(m, RIdeal::zero(C)).is_unit());
    CHECK(r_intersect(RIdeal(C, {v[0]}), RIdeal(C, {v[1]})) == RIdeal(C, {v[0] * v[1]}));
    CHECK(r_colon(RIdeal(C, {v[0]}), r_normal_form(v[2], C)) == xz);

    auto other = present_ring(2, {"x", "y", "z"});
    CHECK_THROWS_AS(r_sum(m, RIdeal::maximal(other)), Error);
}

TEST_CASE("the projection is a ring homomorphism") {
    std::mt19937_64 rng(11);
    auto C = cone();
    const auto& S = C->ambient();
    for (int trial = 0; trial < 50; ++trial) {
        auto f = random_poly(rng, S, 4, 3);
        auto g = random_poly(rng, S, 4, 3);
        auto nf = r_normal_form(f, C);
        auto ng = r_normal_form(g, C);
        CHECK(r_normal_form(f * g, C) == nf * ng);
        CHECK(r_normal_form(f + g, C) == nf + ng);
        CHECK(C->defining_ideal().contains(f - nf.repr()));
    }
}

TEST_CASE("colon membership characterization") {
    std::mt19937_64 rng(12);
    auto C = cone();
    const auto& S = C->ambient();
    for (int trial = 0; trial < 20; ++trial) {
        RIdeal A(C, {random_poly(rng, S, 2, 2, true), random_poly(rng, S, 2, 2, true)});
        RIdeal B(C, {random_poly(rng, S, 2, 1, true)});
        auto Q = r_colon(A, B);
        for (int sample = 0; sample < 5; ++sample) {
            auto w = random_poly(rng, S, 3, 2);
            bool expected = true;
            for (const auto& b : B.generators()) expected = expected && A.contains(w * b);
            CHECK(Q.contains(w) == expected);
        }
        for (const auto& g : Q.generators())
            for (const auto& b : B.generators()) CHECK(A.contains(g * b));
    }
}

TEST_CASE("bracket powers do not depend on lift representatives") {
    std::mt19937_64 rng(13);
    auto C = cone();
    const auto& S = C->ambient();
    const auto& rel = C->defining_basis().basis().front();
    FrobeniusExponent q(C->field(), 1);
    for (int trial = 0; trial < 20; ++trial) {
        auto g1 = random_poly(rng, S, 3, 2);
        auto g2 = random_poly(rng, S, 3, 2);
        auto shift = random_poly(rng, S, 2, 1) * rel;
        auto a = r_bracket_power(RIdeal(C, {g1, g2}), q);
        auto b = r_bracket_power(RIdeal(C, {g1 + shift, g2}), q);
        CHECK(a == b);
    }
}
