#ifndef FROBKIT_DSL_EVALUATE_HPP
#define FROBKIT_DSL_EVALUATE_HPP

#include <functional>
#include <optional>
#include <string>

#include "frobkit/dsl/ast.hpp"
#include "frobkit/polynomial.hpp"

namespace frobkit::dsl {

/// Looks up a non-variable name as a polynomial of the target ring.
using NameResolver = std::function<std::optional<Polynomial>(const std::string&)>;

/// Variables of `ring` take precedence over the resolver. Throws
/// Error(UnboundName) for names neither knows.
Polynomial evaluate(const PolyExpr& e, const RingPtr& ring, const NameResolver& resolve = {});

}  // namespace frobkit::dsl

#endif
