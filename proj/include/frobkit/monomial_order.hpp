#ifndef FROBKIT_MONOMIAL_ORDER_HPP
#define FROBKIT_MONOMIAL_ORDER_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "frobkit/monomial.hpp"

namespace frobkit {

enum class OrderKind { lex, grlex, grevlex };

std::string_view to_string(OrderKind kind) noexcept;
std::optional<OrderKind> parse_order_kind(std::string_view name) noexcept;

/// A term order on exponent vectors.
///
/// `precedence` lists variable indices from most to least significant.
/// The precedence list is cut into consecutive blocks; monomials are
/// compared block by block (lex between blocks) and with `kind` inside a
/// block. A single block gives the plain lex/grlex/grevlex order; two or
/// more blocks give the elimination orders used for intersections.
class MonomialOrder {
   public:
    MonomialOrder(OrderKind kind, std::vector<std::size_t> precedence, std::vector<std::size_t> block_sizes = {});

    /// Plain order with x_0 > x_1 > ... > x_{n-1}.
    static MonomialOrder standard(OrderKind kind, std::size_t arity);

    OrderKind kind() const noexcept { return kind_; }
    std::size_t arity() const noexcept { return precedence_.size(); }
    const std::vector<std::size_t>& precedence() const noexcept { return precedence_; }
    const std::vector<std::size_t>& block_sizes() const noexcept { return blocks_; }
    bool is_elimination() const noexcept { return blocks_.size() > 1; }

    /// Throws ArityMismatch when either monomial has the wrong arity.
    std::strong_ordering compare(const Monomial& u, const Monomial& v) const;
    /// Same as compare without the arity check.
    std::strong_ordering compare_unchecked(const Monomial& u, const Monomial& v) const noexcept;

    /// Order with `fresh_count` new variables (indices arity()..) placed in a
    /// new leading block, every existing block kept below it.
    MonomialOrder with_leading_block(std::size_t fresh_count) const;
    /// Two-block elimination order: `eliminated` (in current precedence) first.
    MonomialOrder eliminating(const std::vector<std::size_t>& eliminated) const;

    /// Stable text form, e.g. "grevlex(0,1,2)" or "grevlex(3|0,1,2)".
    std::string describe() const;

    friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

   private:
    std::strong_ordering compare_block(const Monomial& u, const Monomial& v, std::size_t begin,
                                       std::size_t end) const noexcept;

    OrderKind kind_;
    std::vector<std::size_t> precedence_;
    std::vector<std::size_t> blocks_;
};

}  // namespace frobkit

#endif
