#ifndef FROBKIT_DSL_PARSER_HPP
#define FROBKIT_DSL_PARSER_HPP

#include <string>
#include <string_view>

#include "frobkit/dsl/ast.hpp"

namespace frobkit::dsl {

/// Statements are separated by ';' or by newlines outside brackets; '#'
/// starts a comment. Throws SyntaxError, or Error(NonPrimeCharacteristic).
Script parse(std::string_view source);

/// A single polynomial expression such as "3*x^2*y + 2".
PolyExpr parse_polynomial(std::string_view source);

/// Every name used in a polynomial must be bound by an earlier statement
/// or be a variable of an earlier ring. Throws Error(UnboundName).
void check_names(const Script& script);

std::string print(const PolyExpr& e);
std::string print(const Expr& e);
std::string print(const Statement& s);
/// One statement per line; parse(print(s)) == s.
std::string print(const Script& s);

}  // namespace frobkit::dsl

#endif
