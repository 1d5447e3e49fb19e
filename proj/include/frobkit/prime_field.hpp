#ifndef FROBKIT_PRIME_FIELD_HPP
#define FROBKIT_PRIME_FIELD_HPP

#include <cstdint>

namespace frobkit {

bool is_prime(std::uint64_t n) noexcept;

/// The field F_p for a machine-word prime p <= 2^31 - 1.
///
/// Elements are plain residues in [0, p). Every operation assumes its
/// operands are already reduced; `reduce` brings arbitrary integers in.
class PrimeField {
   public:
    using Element = std::uint32_t;

    static constexpr std::uint64_t max_characteristic = (std::uint64_t{1} << 31) - 1;

    /// Throws NonPrimeCharacteristic when p is not a prime in range.
    explicit PrimeField(std::uint64_t p);

    std::uint32_t characteristic() const noexcept { return p_; }

    Element reduce(std::int64_t value) const noexcept;
    Element add(Element a, Element b) const noexcept;
    Element sub(Element a, Element b) const noexcept;
    Element neg(Element a) const noexcept;
    Element mul(Element a, Element b) const noexcept;
    Element pow(Element a, std::uint64_t exponent) const noexcept;
    /// Throws DivisionByZero for a == 0.
    Element inv(Element a) const;

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

   private:
    std::uint32_t p_;
};

/// q = p^e, the exponent of an iterated Frobenius map.
class FrobeniusExponent {
   public:
    /// q is capped at 2^31 so exponent vectors stay in 32 bits.
    static constexpr std::uint64_t max_q = std::uint64_t{1} << 31;

    FrobeniusExponent(const PrimeField& field, unsigned e);
    /// Throws InvalidFrobeniusExponent unless q is a power of p.
    static FrobeniusExponent from_q(const PrimeField& field, std::uint64_t q);

    std::uint32_t characteristic() const noexcept { return p_; }
    unsigned e() const noexcept { return e_; }
    std::uint64_t q() const noexcept { return q_; }

    friend bool operator==(const FrobeniusExponent&, const FrobeniusExponent&) = default;

   private:
    std::uint32_t p_;
    unsigned e_;
    std::uint64_t q_;
};

}  // namespace frobkit

#endif
