#ifndef FROBKIT_DSL_AST_HPP
#define FROBKIT_DSL_AST_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace frobkit::dsl {

struct Factor {
    std::string name;
    std::uint64_t exponent = 1;

    friend bool operator==(const Factor&, const Factor&) = default;
};

struct TermExpr {
    bool negative = false;
    std::optional<std::uint64_t> coefficient;
    std::vector<Factor> factors;

    friend bool operator==(const TermExpr&, const TermExpr&) = default;
};

struct PolyExpr {
    std::vector<TermExpr> terms;

    /// The bare name of a single-factor, coefficient-free expression.
    std::optional<std::string> as_name() const;
    /// The value of a constant expression.
    std::optional<std::int64_t> as_integer() const;

    friend bool operator==(const PolyExpr&, const PolyExpr&) = default;
};

struct IdealExpr {
    std::vector<PolyExpr> generators;

    friend bool operator==(const IdealExpr&, const IdealExpr&) = default;
};

struct RingExpr {
    std::uint64_t characteristic = 0;
    std::vector<std::string> variables;
    std::vector<PolyExpr> relations;

    friend bool operator==(const RingExpr&, const RingExpr&) = default;
};

struct Expr;

struct ListExpr {
    std::vector<Expr> items;
};

struct Expr {
    std::variant<PolyExpr, IdealExpr, RingExpr, ListExpr> node;
};

inline bool operator==(const ListExpr& a, const ListExpr& b) { return a.items == b.items; }
inline bool operator==(const Expr& a, const Expr& b) { return a.node == b.node; }

struct Argument {
    std::optional<std::string> keyword;
    Expr value;

    friend bool operator==(const Argument&, const Argument&) = default;
};

struct Let {
    std::string name;
    Expr value;

    friend bool operator==(const Let&, const Let&) = default;
};

struct Command {
    std::string name;
    std::vector<Argument> args;

    friend bool operator==(const Command&, const Command&) = default;
};

struct Statement {
    std::variant<Let, Command> body;
    std::size_t line = 0;
    std::size_t column = 0;

    /// Positions are not part of the value.
    friend bool operator==(const Statement& a, const Statement& b) { return a.body == b.body; }
};

struct Script {
    std::vector<Statement> statements;

    friend bool operator==(const Script&, const Script&) = default;
};

}  // namespace frobkit::dsl

#endif
