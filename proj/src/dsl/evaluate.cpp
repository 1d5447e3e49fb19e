#include "frobkit/dsl/evaluate.hpp"

#include <limits>

#include "frobkit/error.hpp"

namespace frobkit::dsl {

Polynomial evaluate(const PolyExpr& e, const RingPtr& ring, const NameResolver& resolve) {
    const auto p = ring->field().characteristic();
    Polynomial out(ring);
    for (const auto& t : e.terms) {
        const auto c = static_cast<std::int64_t>(t.coefficient.value_or(1) % p);
        Polynomial term = Polynomial::constant(ring, t.negative ? -c : c);
        for (const auto& f : t.factors) {
            if (auto index = ring->variable_index(f.name)) {
                if (f.exponent > std::numeric_limits<Monomial::Exponent>::max())
                    throw Error(ErrorCode::ExponentOverflow, "exponent of " + f.name + " is too large");
                auto m = Monomial::variable(ring->arity(), *index, static_cast<Monomial::Exponent>(f.exponent));
                term = term.times_term(m, 1);
                continue;
            }
            std::optional<Polynomial> bound;
            if (resolve) bound = resolve(f.name);
            if (!bound) throw Error(ErrorCode::UnboundName, "'" + f.name + "' is neither a variable nor a polynomial");
            term = term * pow(*bound, f.exponent);
        }
        out += term;
    }
    return out;
}

}  // namespace frobkit::dsl
