#include "frobkit/ideal_ops.hpp"

#include <functional>

#include "frobkit/error.hpp"

namespace frobkit {

namespace {

void require_same_ring(const Ideal& I, const Ideal& J) {
    if (!I.ring()->same_variables(*J.ring())) throw Error(ErrorCode::ArityMismatch, "ideals live in different rings");
}

}  // namespace

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
    require_same_ring(I, J);
    std::vector<Polynomial> gens(I.generators().begin(), I.generators().end());
    gens.insert(gens.end(), J.generators().begin(), J.generators().end());
    return Ideal(I.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& I, const Ideal& J) {
    require_same_ring(I, J);
    std::vector<Polynomial> gens;
    for (const auto& f : I.nonzero_generators())
        for (const auto& g : J.nonzero_generators()) gens.push_back(f * g.reordered(I.ring()));
    return Ideal(I.ring(), std::move(gens));
}

Ideal ideal_power(const Ideal& I, std::uint64_t n) {
    if (n == 0) return Ideal::unit(I.ring());
    const auto gens = I.nonzero_generators();
    std::vector<Polynomial> out;
    // Multisets of size n drawn from the generators, as non-decreasing index tuples.
    std::function<void(std::size_t, std::uint64_t, const Polynomial&)> build =
        [&](std::size_t start, std::uint64_t remaining, const Polynomial& acc) {
            if (remaining == 0) {
                out.push_back(acc);
                return;
            }
            for (std::size_t k = start; k < gens.size(); ++k) build(k, remaining - 1, acc * gens[k]);
        };
    build(0, n, Polynomial::constant(I.ring(), 1));
    return Ideal(I.ring(), std::move(out));
}

Ideal bracket_power(const Ideal& I, const FrobeniusExponent& q) {
    std::vector<Polynomial> gens;
    gens.reserve(I.generators().size());
    for (const auto& g : I.generators()) gens.push_back(frobenius_pow(g, q));
    return Ideal(I.ring(), std::move(gens));
}

Ideal intersect(const Ideal& I, const Ideal& J) {
    require_same_ring(I, J);
    const auto& ring = I.ring();
    if (I.has_zero_generators_only() || J.has_zero_generators_only()) return Ideal::zero(ring);
    if (J.is_unit()) return I;
    if (I.is_unit()) return Ideal(ring, std::vector<Polynomial>(J.generators().begin(), J.generators().end()));

    auto extended = ring->extended_by_fresh_variable();
    const auto t = Polynomial::variable(extended, ring->arity());
    const auto one_minus_t = Polynomial::constant(extended, 1) - t;
    std::vector<Polynomial> gens;
    for (const auto& f : I.nonzero_generators()) gens.push_back(t * f.embedded(extended));
    for (const auto& g : J.nonzero_generators()) gens.push_back(one_minus_t * g.reordered(ring).embedded(extended));

    const auto gb = buchberger(gens, extended);
    std::vector<Polynomial> kept;
    for (const auto& g : gb.basis())
        if (!g.involves(ring->arity())) kept.push_back(g.projected(ring));
    return Ideal(ring, std::move(kept));
}

Polynomial exact_quotient(const Polynomial& g, const Polynomial& f) {
    if (f.is_zero()) throw Error(ErrorCode::DivisionByZero, "exact division by the zero polynomial");
    auto division = divide(g, std::span<const Polynomial>(&f, 1));
    if (!division.remainder.is_zero())
        throw Error(ErrorCode::InternalError, "division of " + to_string(g) + " by " + to_string(f) + " is not exact");
    return division.quotients.front();
}

Ideal colon(const Ideal& I, const Polynomial& f_in) {
    const auto& ring = I.ring();
    if (!f_in.ring()->same_variables(*ring)) throw Error(ErrorCode::ArityMismatch, "element and ideal live in different rings");
    const auto f = f_in.reordered(ring);
    if (f.is_zero() || I.contains(f)) return Ideal::unit(ring);
    if (f.is_constant()) return I;
    const auto both = intersect(I, Ideal(ring, {f}));
    std::vector<Polynomial> gens;
    for (const auto& g : both.generators()) gens.push_back(exact_quotient(g, f));
    return Ideal(ring, std::move(gens));
}

Ideal colon(const Ideal& I, const Ideal& J) {
    require_same_ring(I, J);
    Ideal result = Ideal::unit(I.ring());
    for (const auto& f : J.nonzero_generators()) {
        auto part = colon(I, f);
        if (part.is_unit()) continue;
        result = result.is_unit() ? part : intersect(result, part);
    }
    return result;
}

bool radical_member(const Polynomial& f, const Ideal& I) {
    const auto& ring = I.ring();
    if (!f.ring()->same_variables(*ring)) throw Error(ErrorCode::ArityMismatch, "element and ideal live in different rings");
    if (I.contains(f)) return true;
    auto extended = ring->extended_by_fresh_variable();
    const auto t = Polynomial::variable(extended, ring->arity());
    std::vector<Polynomial> gens;
    for (const auto& g : I.nonzero_generators()) gens.push_back(g.embedded(extended));
    gens.push_back(Polynomial::constant(extended, 1) - t * f.reordered(ring).embedded(extended));
    return buchberger(gens, extended).is_unit_ideal();
}

}  // namespace frobkit
