#ifndef FROBKIT_POLYNOMIAL_HPP
#define FROBKIT_POLYNOMIAL_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "frobkit/monomial.hpp"
#include "frobkit/monomial_order.hpp"
#include "frobkit/prime_field.hpp"

namespace frobkit {

class PolynomialRing;
using RingPtr = std::shared_ptr<const PolynomialRing>;

/// GF(p)[vars] together with the active term order.
///
/// Rings are immutable and shared. Changing the order yields a new ring;
/// polynomials must be moved across explicitly with Polynomial::reordered.
class PolynomialRing {
   public:
    static RingPtr make(PrimeField field, std::vector<std::string> variables, MonomialOrder order);
    static RingPtr make(PrimeField field, std::vector<std::string> variables, OrderKind kind = OrderKind::grevlex);

    const PrimeField& field() const noexcept { return field_; }
    std::size_t arity() const noexcept { return variables_.size(); }
    const std::vector<std::string>& variables() const noexcept { return variables_; }
    const MonomialOrder& order() const noexcept { return order_; }
    std::optional<std::size_t> variable_index(std::string_view name) const noexcept;

    RingPtr with_order(MonomialOrder order) const;
    /// Appends one fresh variable, highest in a new leading block.
    RingPtr extended_by_fresh_variable() const;

    bool same_variables(const PolynomialRing& other) const noexcept {
        return field_ == other.field_ && variables_ == other.variables_;
    }
    friend bool operator==(const PolynomialRing& a, const PolynomialRing& b) noexcept {
        return a.same_variables(b) && a.order_ == b.order_;
    }

   private:
    PolynomialRing(PrimeField field, std::vector<std::string> variables, MonomialOrder order);

    PrimeField field_;
    std::vector<std::string> variables_;
    MonomialOrder order_;
};

/// Throws ArityMismatch for different fields or variables, OrderMismatch
/// for the same variables under different orders.
void require_compatible(const PolynomialRing& a, const PolynomialRing& b);

struct Term {
    Monomial monomial;
    PrimeField::Element coeff;

    friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial: nonzero terms kept strictly decreasing in the ring's order.
class Polynomial {
   public:
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial constant(RingPtr ring, std::int64_t value);
    static Polynomial variable(RingPtr ring, std::size_t index);
    static Polynomial monomial(RingPtr ring, Monomial m, PrimeField::Element coeff = 1);
    /// Terms in any order; like monomials are combined and zeros dropped.
    static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

    const RingPtr& ring() const noexcept { return ring_; }
    const PrimeField& field() const noexcept { return ring_->field(); }
    std::span<const Term> terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }

    const Term& leading_term() const;
    const Monomial& leading_monomial() const { return leading_term().monomial; }
    PrimeField::Element leading_coeff() const { return leading_term().coeff; }

    std::uint64_t total_degree() const noexcept;
    bool is_homogeneous() const noexcept;
    /// True iff variable `index` occurs in some term.
    bool involves(std::size_t index) const noexcept;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
    friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);

    Polynomial scaled(PrimeField::Element c) const;
    Polynomial times_term(const Monomial& m, PrimeField::Element c) const;
    /// this - c * m * g in one merge pass.
    void subtract_multiple(PrimeField::Element c, const Monomial& m, const Polynomial& g);
    Polynomial monic() const;
    /// Removes and returns the leading term.
    Term pop_leading();

    /// Same polynomial in a ring with identical variables but another order.
    Polynomial reordered(const RingPtr& target) const;
    /// Into a ring whose variables extend this ring's variables.
    Polynomial embedded(const RingPtr& target) const;
    /// Into a ring with a prefix of the variables; throws InvalidArgument if
    /// a dropped variable occurs.
    Polynomial projected(const RingPtr& target) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b);

   private:
    Polynomial(RingPtr ring, std::vector<Term> sorted_terms) : ring_(std::move(ring)), terms_(std::move(sorted_terms)) {}
    void combine(const Polynomial& rhs, bool subtract);

    RingPtr ring_;
    std::vector<Term> terms_;
};

/// f^n by repeated squaring.
Polynomial pow(const Polynomial& f, std::uint64_t n);

/// f^q computed term-wise as sum c^q m^q. Throws InvalidFrobeniusExponent
/// when q is not a power of the ring's characteristic.
Polynomial frobenius_pow(const Polynomial& f, const FrobeniusExponent& q);

/// DSL text: coefficients in [0, p), explicit '*' and '^'.
std::string to_string(const Polynomial& f);
std::string to_string(const PolynomialRing& ring, const Monomial& m);

}  // namespace frobkit

#endif
