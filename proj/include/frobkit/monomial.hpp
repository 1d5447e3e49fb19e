#ifndef FROBKIT_MONOMIAL_HPP
#define FROBKIT_MONOMIAL_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace frobkit {

/// Exponent vector of a power product. All arithmetic is overflow-checked
/// and throws ExponentOverflow rather than wrapping.
class Monomial {
   public:
    using Exponent = std::uint32_t;

    Monomial() = default;
    explicit Monomial(std::size_t arity) : exponents_(arity, 0) {}
    explicit Monomial(std::vector<Exponent> exponents);

    static Monomial variable(std::size_t arity, std::size_t index, Exponent power = 1);

    std::size_t arity() const noexcept { return exponents_.size(); }
    Exponent operator[](std::size_t i) const noexcept { return exponents_[i]; }
    std::span<const Exponent> exponents() const noexcept { return exponents_; }
    std::uint64_t degree() const noexcept { return degree_; }
    bool is_one() const noexcept { return degree_ == 0; }

    /// True iff this monomial divides `other`.
    bool divides(const Monomial& other) const noexcept;
    /// this / divisor; the caller guarantees divisor | this.
    Monomial quotient(const Monomial& divisor) const;
    Monomial pow(std::uint64_t k) const;
    /// Drop or append trailing variables (used by ring extensions).
    Monomial resized(std::size_t arity) const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend Monomial lcm(const Monomial& a, const Monomial& b);
    friend Monomial gcd(const Monomial& a, const Monomial& b);
    friend bool coprime(const Monomial& a, const Monomial& b) noexcept;

    friend bool operator==(const Monomial& a, const Monomial& b) noexcept { return a.exponents_ == b.exponents_; }

   private:
    std::vector<Exponent> exponents_;
    std::uint64_t degree_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept;
};

}  // namespace frobkit

#endif
