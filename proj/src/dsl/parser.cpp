#include "frobkit/dsl/parser.hpp"

#include <cctype>
#include <limits>
#include <set>

#include "frobkit/error.hpp"
#include "frobkit/prime_field.hpp"

namespace frobkit::dsl {

namespace {

enum class Tok { name, integer, punct, separator, end };

struct Token {
    Tok kind;
    std::string text;
    std::size_t line;
    std::size_t column;
};

std::vector<Token> lex(std::string_view src) {
    std::vector<Token> out;
    std::size_t line = 1, column = 1, depth = 0;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            if (src[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
    };
    while (i < src.size()) {
        const char c = src[i];
        if (c == '#') {
            while (i < src.size() && src[i] != '\n') advance(1);
        } else if (c == '\n') {
            if (depth == 0) out.push_back({Tok::separator, "\\n", line, column});
            advance(1);
        } else if (c == ' ' || c == '\t' || c == '\r') {
            advance(1);
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
            out.push_back({Tok::name, std::string(src.substr(i, j - i)), line, column});
            advance(j - i);
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            out.push_back({Tok::integer, std::string(src.substr(i, j - i)), line, column});
            advance(j - i);
        } else if (c == ';') {
            out.push_back({Tok::separator, ";", line, column});
            advance(1);
        } else if (std::string_view("=()[],+-*^/").find(c) != std::string_view::npos) {
            if (c == '(' || c == '[') ++depth;
            if ((c == ')' || c == ']') && depth > 0) --depth;
            out.push_back({Tok::punct, std::string(1, c), line, column});
            advance(1);
        } else {
            throw SyntaxError(line, column, std::string(1, c), "unexpected character");
        }
    }
    out.push_back({Tok::end, "<end>", line, column});
    return out;
}

bool is_reserved(const std::string& name) { return name == "GF" || name == "ideal"; }

class Parser {
   public:
    explicit Parser(std::string_view src) : tokens_(lex(src)) {}

    Script script() {
        Script out;
        for (;;) {
            while (peek().kind == Tok::separator) ++pos_;
            if (peek().kind == Tok::end) break;
            out.statements.push_back(statement());
            if (peek().kind != Tok::separator && peek().kind != Tok::end)
                fail(peek(), "expected end of statement");
        }
        return out;
    }

    PolyExpr lone_polynomial() {
        auto p = poly();
        if (peek().kind != Tok::end) fail(peek(), "unexpected trailing input");
        return p;
    }

   private:
    const Token& peek(std::size_t ahead = 0) const { return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)]; }
    bool at(std::string_view punct, std::size_t ahead = 0) const {
        return peek(ahead).kind == Tok::punct && peek(ahead).text == punct;
    }
    [[noreturn]] static void fail(const Token& t, const std::string& message) {
        throw SyntaxError(t.line, t.column, t.text, message);
    }
    void expect(std::string_view punct) {
        if (!at(punct)) fail(peek(), "expected '" + std::string(punct) + "'");
        ++pos_;
    }
    std::string name() {
        if (peek().kind != Tok::name) fail(peek(), "expected a name");
        return tokens_[pos_++].text;
    }
    std::uint64_t integer() {
        const auto& t = peek();
        if (t.kind != Tok::integer) fail(t, "expected an integer");
        std::uint64_t value = 0;
        for (char c : t.text) {
            const std::uint64_t digit = static_cast<std::uint64_t>(c - '0');
            if (value > (std::numeric_limits<std::uint64_t>::max() - digit) / 10) fail(t, "integer too large");
            value = value * 10 + digit;
        }
        ++pos_;
        return value;
    }

    Statement statement() {
        const auto& start = peek();
        if (start.kind != Tok::name) fail(start, "expected a binding or a command");
        if (at("=", 1)) {
            auto bound = name();
            if (is_reserved(bound)) fail(start, "reserved name");
            ++pos_;
            auto value = expr();
            if (std::holds_alternative<ListExpr>(value.node)) fail(start, "lists cannot be bound");
            return {Let{std::move(bound), std::move(value)}, start.line, start.column};
        }
        if (at("(", 1) && !is_reserved(start.text)) {
            auto cmd = name();
            ++pos_;
            std::vector<Argument> args;
            if (!at(")")) {
                for (;;) {
                    args.push_back(argument());
                    if (!at(",")) break;
                    ++pos_;
                }
            }
            expect(")");
            return {Command{std::move(cmd), std::move(args)}, start.line, start.column};
        }
        fail(peek(1), "expected '=' or '('");
    }

    Argument argument() {
        if (peek().kind == Tok::name && at("=", 1)) {
            auto key = name();
            ++pos_;
            return {std::move(key), expr()};
        }
        return {std::nullopt, expr()};
    }

    Expr expr() {
        if (peek().kind == Tok::name && peek().text == "GF" && at("(", 1)) return {ring()};
        if (peek().kind == Tok::name && peek().text == "ideal" && at("(", 1)) return {ideal()};
        if (at("[")) {
            ++pos_;
            ListExpr list;
            if (!at("]")) {
                for (;;) {
                    list.items.push_back(expr());
                    if (!at(",")) break;
                    ++pos_;
                }
            }
            expect("]");
            return {std::move(list)};
        }
        return {poly()};
    }

    RingExpr ring() {
        ++pos_;
        expect("(");
        const auto& p_token = peek();
        RingExpr r;
        r.characteristic = integer();
        if (r.characteristic > std::numeric_limits<std::uint32_t>::max() || !is_prime(r.characteristic))
            throw Error(ErrorCode::NonPrimeCharacteristic, std::to_string(p_token.line) + ":" +
                                                               std::to_string(p_token.column) + ": GF(" +
                                                               p_token.text + ") needs a prime characteristic");
        expect(")");
        expect("[");
        std::set<std::string> seen;
        for (;;) {
            const auto& t = peek();
            auto v = name();
            if (is_reserved(v)) fail(t, "reserved name");
            if (!seen.insert(v).second) fail(t, "duplicate variable");
            r.variables.push_back(std::move(v));
            if (!at(",")) break;
            ++pos_;
        }
        expect("]");
        if (at("/")) {
            ++pos_;
            expect("(");
            r.relations = poly_list();
            expect(")");
        }
        return r;
    }

    IdealExpr ideal() {
        ++pos_;
        expect("(");
        IdealExpr out{poly_list()};
        expect(")");
        return out;
    }

    std::vector<PolyExpr> poly_list() {
        std::vector<PolyExpr> out{poly()};
        while (at(",")) {
            ++pos_;
            out.push_back(poly());
        }
        return out;
    }

    PolyExpr poly() {
        PolyExpr out;
        bool negative = false;
        if (at("-")) {
            negative = true;
            ++pos_;
        }
        out.terms.push_back(term(negative));
        while (at("+") || at("-")) {
            negative = at("-");
            ++pos_;
            out.terms.push_back(term(negative));
        }
        return out;
    }

    TermExpr term(bool negative) {
        TermExpr t{negative, std::nullopt, {}};
        const auto& start = peek();
        if (start.kind == Tok::integer) t.coefficient = integer();
        for (;;) {
            const bool starred = at("*");
            if (starred) {
                if (!t.coefficient && t.factors.empty()) fail(peek(), "expected a term");
                ++pos_;
            }
            if (peek().kind != Tok::name || is_reserved(peek().text) || at("=", 1) || at("(", 1)) {
                if (starred) fail(peek(), "expected a variable after '*'");
                break;
            }
            Factor f{name(), 1};
            if (at("^")) {
                ++pos_;
                f.exponent = integer();
            }
            t.factors.push_back(std::move(f));
        }
        if (!t.coefficient && t.factors.empty()) fail(start, "expected a term");
        return t;
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

void check_poly(const PolyExpr& p, const std::set<std::string>& known) {
    for (const auto& t : p.terms)
        for (const auto& f : t.factors)
            if (!known.contains(f.name)) throw Error(ErrorCode::UnboundName, "'" + f.name + "' is not bound");
}

void check_expr(const Expr& e, const std::set<std::string>& known) {
    std::visit(
        [&](const auto& node) {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, PolyExpr>) {
                check_poly(node, known);
            } else if constexpr (std::is_same_v<T, IdealExpr>) {
                for (const auto& g : node.generators) check_poly(g, known);
            } else if constexpr (std::is_same_v<T, RingExpr>) {
                auto inner = known;
                inner.insert(node.variables.begin(), node.variables.end());
                for (const auto& r : node.relations) check_poly(r, inner);
            } else {
                for (const auto& item : node.items) check_expr(item, known);
            }
        },
        e.node);
}

std::string print_term(const TermExpr& t) {
    std::string out;
    if (t.coefficient) out = std::to_string(*t.coefficient);
    for (const auto& f : t.factors) {
        if (!out.empty()) out += "*";
        out += f.name;
        if (f.exponent != 1) out += "^" + std::to_string(f.exponent);
    }
    return out;
}

template <class Items, class Fn>
std::string join(const Items& items, Fn&& fn) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i != 0) out += ", ";
        out += fn(items[i]);
    }
    return out;
}

}  // namespace

std::optional<std::string> PolyExpr::as_name() const {
    if (terms.size() != 1) return std::nullopt;
    const auto& t = terms.front();
    if (t.negative || t.coefficient || t.factors.size() != 1 || t.factors.front().exponent != 1) return std::nullopt;
    return t.factors.front().name;
}

std::optional<std::int64_t> PolyExpr::as_integer() const {
    if (terms.size() != 1) return std::nullopt;
    const auto& t = terms.front();
    if (!t.coefficient || !t.factors.empty()) return std::nullopt;
    if (*t.coefficient > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) return std::nullopt;
    const auto v = static_cast<std::int64_t>(*t.coefficient);
    return t.negative ? -v : v;
}

Script parse(std::string_view source) { return Parser(source).script(); }

PolyExpr parse_polynomial(std::string_view source) { return Parser(source).lone_polynomial(); }

void check_names(const Script& script) {
    std::set<std::string> known;
    for (const auto& s : script.statements) {
        try {
            if (const auto* let = std::get_if<Let>(&s.body)) {
                check_expr(let->value, known);
                known.insert(let->name);
                if (const auto* ring = std::get_if<RingExpr>(&let->value.node))
                    known.insert(ring->variables.begin(), ring->variables.end());
            } else {
                for (const auto& arg : std::get<Command>(s.body).args) {
                    check_expr(arg.value, known);
                    if (const auto* ring = std::get_if<RingExpr>(&arg.value.node))
                        known.insert(ring->variables.begin(), ring->variables.end());
                }
            }
        } catch (const Error& e) {
            throw Error(e.code(), std::to_string(s.line) + ":" + std::to_string(s.column) + ": " + e.detail());
        }
    }
}

std::string print(const PolyExpr& e) {
    std::string out;
    for (std::size_t i = 0; i < e.terms.size(); ++i) {
        const auto& t = e.terms[i];
        if (i == 0)
            out += t.negative ? "-" : "";
        else
            out += t.negative ? " - " : " + ";
        out += print_term(t);
    }
    return out;
}

std::string print(const Expr& e) {
    return std::visit(
        [](const auto& node) -> std::string {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, PolyExpr>) {
                return print(node);
            } else if constexpr (std::is_same_v<T, IdealExpr>) {
                return "ideal(" + join(node.generators, [](const PolyExpr& p) { return print(p); }) + ")";
            } else if constexpr (std::is_same_v<T, RingExpr>) {
                std::string out = "GF(" + std::to_string(node.characteristic) + ")[" +
                                  join(node.variables, [](const std::string& v) { return v; }) + "]";
                if (!node.relations.empty())
                    out += "/(" + join(node.relations, [](const PolyExpr& p) { return print(p); }) + ")";
                return out;
            } else {
                return "[" + join(node.items, [](const Expr& x) { return print(x); }) + "]";
            }
        },
        e.node);
}

std::string print(const Statement& s) {
    if (const auto* let = std::get_if<Let>(&s.body)) return let->name + " = " + print(let->value);
    const auto& cmd = std::get<Command>(s.body);
    return cmd.name + "(" + join(cmd.args, [](const Argument& a) {
               return (a.keyword ? *a.keyword + "=" : std::string()) + print(a.value);
           }) + ")";
}

std::string print(const Script& s) {
    std::string out;
    for (const auto& st : s.statements) out += print(st) + "\n";
    return out;
}

}  // namespace frobkit::dsl
