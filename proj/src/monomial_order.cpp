#include "frobkit/monomial_order.hpp"

#include <algorithm>
#include <numeric>

#include "frobkit/error.hpp"

namespace frobkit {

std::string_view to_string(OrderKind kind) noexcept {
    switch (kind) {
        case OrderKind::lex: return "lex";
        case OrderKind::grlex: return "grlex";
        case OrderKind::grevlex: return "grevlex";
    }
    return "grevlex";
}

std::optional<OrderKind> parse_order_kind(std::string_view name) noexcept {
    if (name == "lex") return OrderKind::lex;
    if (name == "grlex") return OrderKind::grlex;
    if (name == "grevlex") return OrderKind::grevlex;
    return std::nullopt;
}

MonomialOrder::MonomialOrder(OrderKind kind, std::vector<std::size_t> precedence, std::vector<std::size_t> block_sizes)
    : kind_(kind), precedence_(std::move(precedence)), blocks_(std::move(block_sizes)) {
    std::vector<std::size_t> sorted = precedence_;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] != i) throw Error(ErrorCode::InvalidArgument, "variable precedence is not a permutation");
    blocks_.erase(std::remove(blocks_.begin(), blocks_.end(), std::size_t{0}), blocks_.end());
    if (blocks_.empty()) {
        if (!precedence_.empty()) blocks_.push_back(precedence_.size());
    } else if (std::accumulate(blocks_.begin(), blocks_.end(), std::size_t{0}) != precedence_.size()) {
        throw Error(ErrorCode::InvalidArgument, "block sizes do not cover the variables");
    }
    // A lex order is lex whatever the blocks are; normalize so equality is semantic.
    if (kind_ == OrderKind::lex && blocks_.size() > 1) blocks_ = {precedence_.size()};
}

MonomialOrder MonomialOrder::standard(OrderKind kind, std::size_t arity) {
    std::vector<std::size_t> precedence(arity);
    std::iota(precedence.begin(), precedence.end(), std::size_t{0});
    return MonomialOrder(kind, std::move(precedence));
}

std::strong_ordering MonomialOrder::compare(const Monomial& u, const Monomial& v) const {
    if (u.arity() != arity() || v.arity() != arity())
        throw Error(ErrorCode::ArityMismatch, "monomial arity does not match the order's variable count");
    return compare_unchecked(u, v);
}

std::strong_ordering MonomialOrder::compare_unchecked(const Monomial& u, const Monomial& v) const noexcept {
    if (blocks_.size() == 1 && kind_ != OrderKind::lex && u.degree() != v.degree())
        return u.degree() <=> v.degree();
    std::size_t begin = 0;
    for (std::size_t size : blocks_) {
        auto c = compare_block(u, v, begin, begin + size);
        if (c != std::strong_ordering::equal) return c;
        begin += size;
    }
    return std::strong_ordering::equal;
}

std::strong_ordering MonomialOrder::compare_block(const Monomial& u, const Monomial& v, std::size_t begin,
                                                  std::size_t end) const noexcept {
    switch (kind_) {
        case OrderKind::lex:
            for (std::size_t k = begin; k < end; ++k) {
                auto i = precedence_[k];
                if (u[i] != v[i]) return u[i] <=> v[i];
            }
            return std::strong_ordering::equal;
        case OrderKind::grlex: {
            std::uint64_t du = 0, dv = 0;
            for (std::size_t k = begin; k < end; ++k) {
                du += u[precedence_[k]];
                dv += v[precedence_[k]];
            }
            if (du != dv) return du <=> dv;
            for (std::size_t k = begin; k < end; ++k) {
                auto i = precedence_[k];
                if (u[i] != v[i]) return u[i] <=> v[i];
            }
            return std::strong_ordering::equal;
        }
        case OrderKind::grevlex: {
            std::uint64_t du = 0, dv = 0;
            for (std::size_t k = begin; k < end; ++k) {
                du += u[precedence_[k]];
                dv += v[precedence_[k]];
            }
            if (du != dv) return du <=> dv;
            // Smaller exponent in the least significant differing variable wins.
            for (std::size_t k = end; k-- > begin;) {
                auto i = precedence_[k];
                if (u[i] != v[i]) return v[i] <=> u[i];
            }
            return std::strong_ordering::equal;
        }
    }
    return std::strong_ordering::equal;
}

MonomialOrder MonomialOrder::with_leading_block(std::size_t fresh_count) const {
    std::vector<std::size_t> precedence;
    for (std::size_t i = 0; i < fresh_count; ++i) precedence.push_back(arity() + i);
    precedence.insert(precedence.end(), precedence_.begin(), precedence_.end());
    std::vector<std::size_t> blocks{fresh_count};
    blocks.insert(blocks.end(), blocks_.begin(), blocks_.end());
    return MonomialOrder(kind_, std::move(precedence), std::move(blocks));
}

MonomialOrder MonomialOrder::eliminating(const std::vector<std::size_t>& eliminated) const {
    std::vector<std::size_t> first, rest;
    for (std::size_t i : precedence_) {
        if (std::find(eliminated.begin(), eliminated.end(), i) != eliminated.end())
            first.push_back(i);
        else
            rest.push_back(i);
    }
    if (first.size() != eliminated.size())
        throw Error(ErrorCode::InvalidArgument, "elimination variable out of range");
    std::vector<std::size_t> blocks{first.size(), rest.size()};
    first.insert(first.end(), rest.begin(), rest.end());
    return MonomialOrder(kind_, std::move(first), std::move(blocks));
}

std::string MonomialOrder::describe() const {
    std::string out(to_string(kind_));
    out += '(';
    std::size_t k = 0;
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        if (b != 0) out += '|';
        for (std::size_t j = 0; j < blocks_[b]; ++j, ++k) {
            if (j != 0) out += ',';
            out += std::to_string(precedence_[k]);
        }
    }
    out += ')';
    return out;
}

}  // namespace frobkit
