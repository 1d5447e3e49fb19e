#include <random>

#include "doctest.h"
#include "frobkit/error.hpp"
#include "frobkit/monomial_order.hpp"

using namespace frobkit;

namespace {

Monomial mono(std::vector<std::uint32_t> e) { return Monomial(std::move(e)); }

}  // namespace

TEST_CASE("named orders on three variables") {
    auto lex = MonomialOrder::standard(OrderKind::lex, 3);
    auto grevlex = MonomialOrder::standard(OrderKind::grevlex, 3);
    auto grlex = MonomialOrder::standard(OrderKind::grlex, 3);

    // x^2 z vs x y^2
    CHECK(lex.compare(mono({2, 0, 1}), mono({1, 2, 0})) == std::strong_ordering::greater);
    // x y^2 vs x^2 z: equal degree, smaller z exponent wins
    CHECK(grevlex.compare(mono({1, 2, 0}), mono({2, 0, 1})) == std::strong_ordering::greater);
    CHECK(grlex.compare(mono({1, 2, 0}), mono({2, 0, 1})) == std::strong_ordering::less);
    CHECK(grevlex.compare(mono({1, 1, 1}), mono({1, 1, 1})) == std::strong_ordering::equal);
    // grevlex: x y > z^2
    CHECK(grevlex.compare(mono({1, 1, 0}), mono({0, 0, 2})) == std::strong_ordering::greater);
}

TEST_CASE("arity mismatch") {
    auto order = MonomialOrder::standard(OrderKind::lex, 2);
    CHECK_THROWS_AS((void)order.compare(mono({1, 0}), mono({1, 0, 0})), Error);
}

TEST_CASE("custom precedence") {
    MonomialOrder order(OrderKind::lex, {2, 0, 1});  // z > x > y
    CHECK(order.compare(mono({5, 5, 0}), mono({0, 0, 1})) == std::strong_ordering::less);
    CHECK_THROWS_AS(MonomialOrder(OrderKind::lex, {0, 0, 1}), Error);
}

TEST_CASE("elimination orders put the first block above everything else") {
    auto order = MonomialOrder::standard(OrderKind::grevlex, 3).eliminating({1});
    // y beats x^9 z^9
    CHECK(order.compare(mono({0, 1, 0}), mono({9, 0, 9})) == std::strong_ordering::greater);
    auto extended = MonomialOrder::standard(OrderKind::grevlex, 2).with_leading_block(1);
    CHECK(extended.arity() == 3);
    CHECK(extended.compare(mono({0, 0, 1}), mono({7, 7, 0})) == std::strong_ordering::greater);
    CHECK(extended.describe() == "grevlex(2|0,1)");
}

TEST_CASE("order axioms on random triples") {
    std::mt19937_64 rng(17);
    std::vector<MonomialOrder> orders{
        MonomialOrder::standard(OrderKind::lex, 3), MonomialOrder::standard(OrderKind::grlex, 3),
        MonomialOrder::standard(OrderKind::grevlex, 3), MonomialOrder(OrderKind::grevlex, {1, 2, 0}),
        MonomialOrder::standard(OrderKind::grevlex, 3).eliminating({2})};
    auto random_mono = [&] { return mono({std::uint32_t(rng() % 5), std::uint32_t(rng() % 5), std::uint32_t(rng() % 5)}); };
    const auto one = mono({0, 0, 0});
    for (const auto& order : orders) {
        for (int trial = 0; trial < 300; ++trial) {
            auto u = random_mono(), v = random_mono(), w = random_mono();
            auto uv = order.compare(u, v);
            CHECK(order.compare(v, u) == 0 <=> uv);
            CHECK((uv == 0) == (u == v));
            CHECK(order.compare(u * w, v * w) == uv);
            CHECK(order.compare(one, u) != std::strong_ordering::greater);
            if (uv < 0 && order.compare(v, w) < 0) CHECK(order.compare(u, w) < 0);
        }
    }
}
