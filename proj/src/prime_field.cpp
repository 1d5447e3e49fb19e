#include "frobkit/prime_field.hpp"

#include <string>

#include "frobkit/error.hpp"

namespace frobkit {

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

PrimeField::PrimeField(std::uint64_t p) {
    if (p > max_characteristic || !is_prime(p))
        throw Error(ErrorCode::NonPrimeCharacteristic, "characteristic " + std::to_string(p) + " is not a prime below 2^31");
    p_ = static_cast<std::uint32_t>(p);
}

PrimeField::Element PrimeField::reduce(std::int64_t value) const noexcept {
    std::int64_t r = value % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<Element>(r);
}

PrimeField::Element PrimeField::add(Element a, Element b) const noexcept {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Element>(s >= p_ ? s - p_ : s);
}

PrimeField::Element PrimeField::sub(Element a, Element b) const noexcept {
    return a >= b ? a - b : static_cast<Element>(std::uint64_t{a} + p_ - b);
}

PrimeField::Element PrimeField::neg(Element a) const noexcept { return a == 0 ? 0 : p_ - a; }

PrimeField::Element PrimeField::mul(Element a, Element b) const noexcept {
    return static_cast<Element>(std::uint64_t{a} * b % p_);
}

PrimeField::Element PrimeField::pow(Element a, std::uint64_t exponent) const noexcept {
    std::uint64_t result = 1 % p_;
    std::uint64_t base = a % p_;
    while (exponent != 0) {
        if (exponent & 1) result = result * base % p_;
        base = base * base % p_;
        exponent >>= 1;
    }
    return static_cast<Element>(result);
}

PrimeField::Element PrimeField::inv(Element a) const {
    if (a % p_ == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero in GF(" + std::to_string(p_) + ")");
    // Extended Euclid; Fermat would also do but costs a full exponentiation.
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p_, new_r = a;
    while (new_r != 0) {
        std::int64_t quotient = r / new_r;
        std::int64_t tmp = t - quotient * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - quotient * new_r;
        r = new_r;
        new_r = tmp;
    }
    return reduce(t);
}

FrobeniusExponent::FrobeniusExponent(const PrimeField& field, unsigned e) : p_(field.characteristic()), e_(e), q_(1) {
    for (unsigned i = 0; i < e; ++i) {
        q_ *= p_;
        if (q_ > max_q)
            throw Error(ErrorCode::InvalidFrobeniusExponent,
                        std::to_string(p_) + "^" + std::to_string(e) + " exceeds the supported bound 2^31");
    }
}

FrobeniusExponent FrobeniusExponent::from_q(const PrimeField& field, std::uint64_t q) {
    const std::uint64_t p = field.characteristic();
    unsigned e = 0;
    std::uint64_t acc = 1;
    while (acc < q && acc <= max_q) {
        acc *= p;
        ++e;
    }
    if (q == 0 || acc != q || q > max_q)
        throw Error(ErrorCode::InvalidFrobeniusExponent,
                    std::to_string(q) + " is not a power of the characteristic " + std::to_string(p));
    return FrobeniusExponent(field, e);
}

}  // namespace frobkit
