#include <random>

#include "doctest.h"
#include "frobkit/error.hpp"
#include "frobkit/invariants.hpp"
#include "helpers.hpp"
#include "linear_algebra.hpp"
#include "monomial_ideals.hpp"

using namespace frobkit;
using namespace testing;

namespace {

QuotientPtr quotient(std::uint64_t p, std::vector<std::string> vars, auto relations) {
    auto S = make_ring(p, std::move(vars));
    return RingPresentation::present(S, relations(variables(S)));
}

QuotientPtr cone(std::uint64_t p) {
    return quotient(p, {"x", "y", "z"}, [](auto v) { return std::vector{v[0] * v[1] - v[2] * v[2]}; });
}

std::vector<Polynomial> all_generators(const RIdeal& I) {
    const auto gens = I.lift().generators();
    return {gens.begin(), gens.end()};
}

ErrorCode code_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::InternalError;
}

}  // namespace

TEST_CASE("Krull dimension") {
    CHECK(krull_dim(*present_ring(2, {"x", "y"})) == 2);
    CHECK(krull_dim(*cone(2)) == 2);
    CHECK(krull_dim(*quotient(2, {"x", "y"}, [](auto v) { return v; })) == 0);
    CHECK(krull_dim(*quotient(2, {"x", "y", "z"}, [](auto v) { return std::vector{v[0] * v[1]}; })) == 2);
    CHECK(krull_dim(*quotient(3, {"x", "y", "z"}, [](auto v) { return std::vector{v[0] * v[1], v[0] * v[2]}; })) == 2);
    CHECK(krull_dim(*quotient(3, {"x", "y", "z"}, [](auto v) { return std::vector{v[0] * v[1], v[1] * v[2], v[0] * v[2]}; })) == 1);
}

TEST_CASE("origin-primary certificates") {
    auto R = present_ring(2, {"x", "y"});
    auto v = variables(R->ambient());
    CHECK(is_origin_primary(RIdeal(R, {v[0] * v[0], pow(v[1], 3)})));
    CHECK_FALSE(is_origin_primary(RIdeal(R, {v[0]})));
    CHECK(is_origin_primary(RIdeal::maximal(R)));
    CHECK_FALSE(is_origin_primary(RIdeal::unit(R)));
    CHECK(is_origin_primary(RIdeal(R, {pow(v[0] + v[1], 2), v[0] * v[1]})));
    CHECK_FALSE(is_origin_primary(RIdeal(R, {v[0] * (v[0] + k(R->ambient(), 1)), v[1]})));

    auto C = cone(2);
    auto w = variables(C->ambient());
    CHECK(is_origin_primary(RIdeal(C, {w[0], w[1]})));
    CHECK_FALSE(is_origin_primary(RIdeal(C, {w[0]})));
}

TEST_CASE("length examples") {
    auto R = present_ring(2, {"x", "y"});
    auto v = variables(R->ambient());
    auto& x = v[0];
    auto& y = v[1];
    CHECK(length(RIdeal(R, {x * x, x * y, pow(y, 3)})) == 4);
    CHECK(length(RIdeal::maximal(R)) == 1);
    CHECK(length(RIdeal::unit(R)) == 0);
    CHECK(code_of([&] { length(RIdeal(R, {x})); }) == ErrorCode::NotPrimaryAtOrigin);
    for (std::uint64_t p : {2, 3, 5, 7}) {
        auto Rp = present_ring(p, {"x", "y"});
        for (unsigned e = 1; e <= 2; ++e) {
            FrobeniusExponent q(Rp->field(), e);
            CHECK(length(r_bracket_power(RIdeal::maximal(Rp), q)) == q.q() * q.q());
        }
    }
}

TEST_CASE("length agrees with graded linear algebra") {
    std::mt19937_64 rng(21);
    for (auto R : {present_ring(3, {"x", "y", "z"}), cone(3), cone(2)}) {
        const auto& S = R->ambient();
        for (int trial = 0; trial < 15; ++trial) {
            FrobeniusExponent q(R->field(), 1);
            const auto frob = r_bracket_power(RIdeal::maximal(R), q);
            std::vector<Polynomial> gens(frob.generators().begin(), frob.generators().end());
            for (int extra = 0; extra < 2; ++extra) gens.push_back(random_poly(rng, S, 3, 3, true));
            RIdeal I(R, gens);
            CHECK(length(I) == oracle::graded_colength(all_generators(I), S->arity()));
        }
    }
}

TEST_CASE("length is additive along inclusions") {
    std::mt19937_64 rng(22);
    auto R = present_ring(5, {"x", "y", "z"});
    const auto& S = R->ambient();
    for (int trial = 0; trial < 30; ++trial) {
        oracle::MonomialIdeal I{3, {}};
        for (std::size_t i = 0; i < 3; ++i) {
            oracle::Mono m(3, 0);
            m[i] = 2 + rng() % 3;
            I.gens.push_back(m);
        }
        for (int g = 0; g < 2; ++g) I.gens.push_back({std::uint32_t(rng() % 3), std::uint32_t(rng() % 3), std::uint32_t(rng() % 3)});
        I = oracle::minimalized(I);
        if (oracle::member({0, 0, 0}, I)) continue;
        auto J = I;
        J.gens.push_back({std::uint32_t(rng() % 2), std::uint32_t(rng() % 2), std::uint32_t(rng() % 3)});
        J = oracle::minimalized(J);
        if (oracle::member({0, 0, 0}, J)) continue;

        std::uint64_t between = 0;
        for (std::uint32_t a = 0; a < 5; ++a)
            for (std::uint32_t b = 0; b < 5; ++b)
                for (std::uint32_t c = 0; c < 5; ++c)
                    if (oracle::member({a, b, c}, J) && !oracle::member({a, b, c}, I)) ++between;

        auto lift_I = oracle::to_ideal(I, S);
        auto lift_J = oracle::to_ideal(J, S);
        RIdeal rI(R, {lift_I.generators().begin(), lift_I.generators().end()});
        RIdeal rJ(R, {lift_J.generators().begin(), lift_J.generators().end()});
        CHECK(length(rI) == oracle::standard_monomial_count(I));
        CHECK(length(rI) == length(rJ) + between);
    }
}

TEST_CASE("multiplicativity in regular models") {
    for (auto R : {present_ring(2, {"x", "y"}), present_ring(3, {"x", "y"}), present_ring(5, {"x", "y", "z"})}) {
        const auto m = RIdeal::maximal(R);
        const auto p_len = length(r_bracket_power(m, FrobeniusExponent(R->field(), 1)));
        for (unsigned e = 1; e <= 2; ++e) {
            if (R->field().characteristic() == 5 && e == 2) continue;
            const auto q_len = length(r_bracket_power(m, FrobeniusExponent(R->field(), e)));
            const auto pq_len = length(r_bracket_power(m, FrobeniusExponent(R->field(), e + 1)));
            CHECK(pq_len == p_len * q_len);
        }
    }
}

TEST_CASE("minimal generator counts") {
    auto R = present_ring(2, {"x", "y"});
    auto v = variables(R->ambient());
    auto& x = v[0];
    auto& y = v[1];
    CHECK(min_generators(RIdeal(R, {x * x, x * y, y * y})) == 3);
    CHECK(min_generators(RIdeal(R, {x, x})) == 1);
    CHECK(min_generators(RIdeal(R, {x * x, x * y, y * y, x * x + x * y})) == 3);
    CHECK(min_generators(RIdeal(R, {x, x * y, x * x})) == 1);
    CHECK(min_generators(RIdeal::zero(R)) == 0);
    CHECK(minimal_generators(RIdeal(R, {x * x, x * x + x * y, x * y})).size() == 2);
    CHECK(code_of([&] { min_generators(RIdeal(R, {x + k(R->ambient(), 1)})); }) == ErrorCode::NonHomogeneousInput);

    auto C = cone(2);
    auto w = variables(C->ambient());
    CHECK(min_generators(RIdeal(C, {w[0], w[2]})) == 2);
    CHECK(min_generators(RIdeal(C, {w[0], w[2], w[2] * w[2]})) == 2);
    auto bent = quotient(2, {"x", "y"}, [](auto u) { return std::vector{u[0] + u[1] * u[1]}; });
    CHECK(code_of([&] { min_generators(RIdeal::maximal(bent)); }) == ErrorCode::NonHomogeneousInput);
}

TEST_CASE("minimal generators of equigenerated ideals match linear rank") {
    std::mt19937_64 rng(23);
    auto R = present_ring(3, {"x", "y", "z"});
    const auto& S = R->ambient();
    for (int trial = 0; trial < 40; ++trial) {
        const std::uint32_t degree = 1 + rng() % 3;
        std::vector<Polynomial> gens;
        const auto count = 1 + rng() % 5;
        for (std::size_t g = 0; g < count; ++g) {
            Polynomial f(S);
            while (f.is_zero() || f.total_degree() != degree) f = random_poly(rng, S, 3, degree, true);
            gens.push_back(f);
        }
        if (trial % 3 == 0) gens.push_back(gens[0] + gens.back());
        CHECK(min_generators(RIdeal(R, gens)) == oracle::linear_rank(gens));
    }
}

TEST_CASE("tail fitting") {
    auto fit = fit_tail({2, 3, 4, 5, 6}, 1);
    REQUIRE(fit);
    CHECK(fit->first.degree() == 1);
    CHECK(fit->second == 1);
    CHECK(fit->first(10) == 11);

    auto triangular = fit_tail({1, 3, 6, 10, 15, 21}, 1);
    REQUIRE(triangular);
    CHECK(triangular->first.degree() == 2);
    CHECK(triangular->first.coefficients[1] == Rational(1, 2));

    auto late = fit_tail({9, 1, 4, 5, 6, 7}, 1);
    REQUIRE(late);
    CHECK(late->first.degree() == 1);
    CHECK(late->second == 3);

    CHECK_FALSE(fit_tail({1, 2, 4, 8}, 1));
    auto constant = fit_tail({1, 1, 1, 1}, 1);
    REQUIRE(constant);
    CHECK(constant->first.degree() == 0);
}

TEST_CASE("generator growth") {
    auto R = present_ring(2, {"x", "y"});
    auto v = variables(R->ambient());
    auto& x = v[0];
    auto& y = v[1];

    auto full = mu_series(RIdeal(R, {x, y}), 8);
    for (const auto& [n, mu] : full.mu_values) CHECK(mu == n + 1);
    REQUIRE(full.fitted);
    CHECK(full.fitted->coefficients == std::vector<Rational>{1, 1});
    CHECK(full.spread_estimate == 2u);

    auto principal = mu_series(RIdeal(R, {x}), 6);
    for (const auto& [n, mu] : principal.mu_values) CHECK(mu == 1);
    REQUIRE(principal.fitted);
    CHECK(principal.fitted->degree() == 0);
    CHECK(principal.spread_estimate == 1u);
    CHECK(principal.fit_window == std::make_pair<std::uint64_t, std::uint64_t>(1, 6));

    auto mixed = mu_series(RIdeal(R, {x * x, x * y}), 6);
    for (const auto& [n, mu] : mixed.mu_values) CHECK(mu == n + 1);
    CHECK(mixed.spread_estimate == 2u);

    auto S3 = present_ring(2, {"x", "y", "z"});
    auto w = variables(S3->ambient());
    auto cubic = mu_series(RIdeal(S3, {w[0], w[1], w[2]}), 5);
    for (const auto& [n, mu] : cubic.mu_values) CHECK(mu == (n + 1) * (n + 2) / 2);
    CHECK(cubic.spread_estimate == 3u);

    CHECK(code_of([&] { mu_series(RIdeal(R, {x}), 3); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("Hilbert-Kunz series") {
    auto plane = hk_series(present_ring(2, {"x", "y"}), 3);
    REQUIRE(plane.rows.size() == 3);
    CHECK(plane.rows[0].lambda == 4);
    CHECK(plane.rows[1].lambda == 16);
    CHECK(plane.rows[2].lambda == 64);
    for (const auto& row : plane.rows) CHECK(row.ratio == 1);
    CHECK(plane.regular_flag);

    auto C = cone(2);
    auto hk = hk_series(C, 3);
    CHECK_FALSE(hk.regular_flag);
    CHECK(hk.rows[0].lambda == 6);
    for (std::size_t i = 0; i < hk.rows.size(); ++i) {
        const auto& row = hk.rows[i];
        CHECK(row.lambda > row.q * row.q);
        CHECK(row.ratio > 1);
        CHECK(row.ratio < 2);
        if (i > 0) CHECK(row.ratio <= hk.rows[i - 1].ratio);
    }
    auto m2 = r_bracket_power(RIdeal::maximal(C), FrobeniusExponent(C->field(), 1));
    CHECK(hk.rows[0].lambda == oracle::graded_colength(all_generators(m2), 3));

    auto point = quotient(3, {"x", "y"}, [](auto v) { return v; });
    auto field = hk_series(point, 2);
    CHECK(field.d == 0);
    for (const auto& row : field.rows) CHECK(row.lambda == 1);
    CHECK(field.regular_flag);
}

TEST_CASE("Kunz test") {
    CHECK(kunz_regular_test(present_ring(3, {"x", "y", "z"}), 1));
    CHECK_FALSE(kunz_regular_test(cone(2), 1));
    CHECK_FALSE(kunz_regular_test(quotient(2, {"x"}, [](auto v) { return std::vector{v[0] * v[0]}; }), 1));
    CHECK_FALSE(kunz_regular_test(quotient(2, {"x", "y"}, [](auto v) { return std::vector{v[0] * v[1]}; }), 1));
    CHECK(kunz_regular_test(quotient(3, {"x", "y", "z"}, [](auto v) { return std::vector{v[2] - v[0] * v[1]}; }), 1));
}

TEST_CASE("ratios never drop below one") {
    std::mt19937_64 rng(24);
    for (int trial = 0; trial < 8; ++trial) {
        auto S = make_ring(2 + 1 * (trial % 2), {"x", "y", "z"});
        auto rel = random_poly(rng, S, 3, 2, true);
        if (rel.is_zero() || rel.total_degree() == 0) continue;
        auto R = RingPresentation::present(S, {rel});
        auto series = hk_series(R, 2);
        for (const auto& row : series.rows) CHECK(row.ratio >= 1);
    }
}
