#ifndef FROBKIT_TEST_HELPERS_HPP
#define FROBKIT_TEST_HELPERS_HPP

#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "frobkit/ideal.hpp"
#include "frobkit/polynomial.hpp"

namespace testing {

using frobkit::Polynomial;
using frobkit::RingPtr;

inline RingPtr make_ring(std::uint64_t p, std::vector<std::string> vars,
                         frobkit::OrderKind kind = frobkit::OrderKind::grevlex) {
    return frobkit::PolynomialRing::make(frobkit::PrimeField(p), std::move(vars), kind);
}

inline std::vector<Polynomial> variables(const RingPtr& ring) {
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < ring->arity(); ++i) out.push_back(Polynomial::variable(ring, i));
    return out;
}

inline Polynomial k(const RingPtr& ring, std::int64_t c) { return Polynomial::constant(ring, c); }

inline frobkit::Ideal ideal(const RingPtr& ring, std::vector<Polynomial> gens) {
    return frobkit::Ideal(ring, std::move(gens));
}

/// Random polynomial with up to `max_terms` terms of degree <= max_degree.
inline Polynomial random_poly(std::mt19937_64& rng, const RingPtr& ring, std::size_t max_terms,
                              std::uint32_t max_degree, bool homogeneous = false) {
    const auto p = ring->field().characteristic();
    std::vector<frobkit::Term> terms;
    const std::size_t count = 1 + rng() % max_terms;
    const std::uint32_t fixed_degree = static_cast<std::uint32_t>(rng() % (max_degree + 1));
    for (std::size_t t = 0; t < count; ++t) {
        std::uint32_t degree = homogeneous ? fixed_degree : static_cast<std::uint32_t>(rng() % (max_degree + 1));
        std::vector<std::uint32_t> e(ring->arity(), 0);
        for (std::uint32_t d = 0; d < degree && !e.empty(); ++d) ++e[rng() % e.size()];
        terms.push_back({frobkit::Monomial(e), static_cast<std::uint32_t>(1 + rng() % (p - 1))});
    }
    return Polynomial::from_terms(ring, std::move(terms));
}

}  // namespace testing

namespace doctest {
template <>
struct StringMaker<frobkit::Polynomial> {
    static String convert(const frobkit::Polynomial& f) { return frobkit::to_string(f).c_str(); }
};
}  // namespace doctest

#endif
