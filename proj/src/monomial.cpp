#include "frobkit/monomial.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "frobkit/error.hpp"

namespace frobkit {

namespace {

constexpr std::uint64_t exponent_limit = std::numeric_limits<Monomial::Exponent>::max();

Monomial::Exponent checked_exponent(std::uint64_t value) {
    if (value > exponent_limit)
        throw Error(ErrorCode::ExponentOverflow, "exponent " + std::to_string(value) + " exceeds 32 bits");
    return static_cast<Monomial::Exponent>(value);
}

void require_same_arity(const Monomial& a, const Monomial& b) {
    if (a.arity() != b.arity())
        throw Error(ErrorCode::ArityMismatch,
                    "monomials over " + std::to_string(a.arity()) + " and " + std::to_string(b.arity()) + " variables");
}

}  // namespace

Monomial::Monomial(std::vector<Exponent> exponents) : exponents_(std::move(exponents)) {
    for (Exponent e : exponents_) degree_ += e;
}

Monomial Monomial::variable(std::size_t arity, std::size_t index, Exponent power) {
    Monomial m(arity);
    m.exponents_.at(index) = power;
    m.degree_ = power;
    return m;
}

bool Monomial::divides(const Monomial& other) const noexcept {
    if (degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < exponents_.size(); ++i)
        if (exponents_[i] > other.exponents_[i]) return false;
    return true;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
    require_same_arity(*this, divisor);
    Monomial result(*this);
    for (std::size_t i = 0; i < exponents_.size(); ++i) {
        if (divisor.exponents_[i] > exponents_[i])
            throw Error(ErrorCode::InternalError, "monomial quotient is not exact");
        result.exponents_[i] -= divisor.exponents_[i];
    }
    result.degree_ = degree_ - divisor.degree_;
    return result;
}

Monomial Monomial::pow(std::uint64_t k) const {
    Monomial result(arity());
    for (std::size_t i = 0; i < exponents_.size(); ++i) {
        if (exponents_[i] != 0 && k > exponent_limit / exponents_[i])
            throw Error(ErrorCode::ExponentOverflow, "monomial power overflows 32-bit exponents");
        result.exponents_[i] = checked_exponent(std::uint64_t{exponents_[i]} * k);
        result.degree_ += result.exponents_[i];
    }
    return result;
}

Monomial Monomial::resized(std::size_t arity) const {
    Monomial result(*this);
    result.exponents_.resize(arity, 0);
    result.degree_ = 0;
    for (Exponent e : result.exponents_) result.degree_ += e;
    return result;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    require_same_arity(a, b);
    Monomial result(a.arity());
    for (std::size_t i = 0; i < a.arity(); ++i)
        result.exponents_[i] = checked_exponent(std::uint64_t{a.exponents_[i]} + b.exponents_[i]);
    result.degree_ = a.degree_ + b.degree_;
    return result;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    require_same_arity(a, b);
    Monomial result(a.arity());
    for (std::size_t i = 0; i < a.arity(); ++i) {
        result.exponents_[i] = std::max(a.exponents_[i], b.exponents_[i]);
        result.degree_ += result.exponents_[i];
    }
    return result;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
    require_same_arity(a, b);
    Monomial result(a.arity());
    for (std::size_t i = 0; i < a.arity(); ++i) {
        result.exponents_[i] = std::min(a.exponents_[i], b.exponents_[i]);
        result.degree_ += result.exponents_[i];
    }
    return result;
}

bool coprime(const Monomial& a, const Monomial& b) noexcept {
    for (std::size_t i = 0; i < a.arity() && i < b.arity(); ++i)
        if (a.exponents_[i] != 0 && b.exponents_[i] != 0) return false;
    return true;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto e : m.exponents()) {
        h ^= e;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace frobkit
