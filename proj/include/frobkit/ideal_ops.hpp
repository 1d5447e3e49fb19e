#ifndef FROBKIT_IDEAL_OPS_HPP
#define FROBKIT_IDEAL_OPS_HPP

#include <cstdint>

#include "frobkit/ideal.hpp"

namespace frobkit {

Ideal ideal_sum(const Ideal& I, const Ideal& J);
Ideal ideal_product(const Ideal& I, const Ideal& J);
/// All degree-n monomials in the generators; I^0 is the unit ideal.
Ideal ideal_power(const Ideal& I, std::uint64_t n);

/// I^[q], generated by the q-th powers of the generators of I.
Ideal bracket_power(const Ideal& I, const FrobeniusExponent& q);

/// I ∩ J by eliminating t from t*I + (1 - t)*J.
Ideal intersect(const Ideal& I, const Ideal& J);

/// g / f for f dividing g exactly; InternalError otherwise.
Polynomial exact_quotient(const Polynomial& g, const Polynomial& f);

/// (I : f) = (I ∩ (f)) / f. (I : 0) is the unit ideal.
Ideal colon(const Ideal& I, const Polynomial& f);
/// (I : J) = intersection of (I : f) over the generators f of J.
Ideal colon(const Ideal& I, const Ideal& J);

/// f in sqrt(I), via 1 in I + (1 - t*f) over the ring extended by t.
bool radical_member(const Polynomial& f, const Ideal& I);

}  // namespace frobkit

#endif
