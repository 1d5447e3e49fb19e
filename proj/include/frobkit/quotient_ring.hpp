#ifndef FROBKIT_QUOTIENT_RING_HPP
#define FROBKIT_QUOTIENT_RING_HPP

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "frobkit/ideal.hpp"

namespace frobkit {

class RingPresentation;
using QuotientPtr = std::shared_ptr<const RingPresentation>;

/// R = S/K for S = GF(p)[vars]. Computations are read at the graded
/// maximal ideal m = (all variables): this is the "at the origin" model of
/// a local ring used throughout the library.
class RingPresentation {
   public:
    /// Throws UnitDefiningIdeal when 1 lies in K.
    static QuotientPtr present(RingPtr ambient, std::vector<Polynomial> relations);

    const RingPtr& ambient() const noexcept { return ambient_; }
    const PrimeField& field() const noexcept { return ambient_->field(); }
    std::size_t arity() const noexcept { return ambient_->arity(); }
    const Ideal& defining_ideal() const noexcept { return defining_; }
    const ReducedGB& defining_basis() const noexcept { return defining_.groebner(); }
    bool is_polynomial_ring() const noexcept { return defining_basis().is_zero_ideal(); }

    /// Canonical representative of f modulo K.
    Polynomial reduce(const Polynomial& f) const;

    /// Text form "GF(p)[x, y]" or "GF(p)[x, y]/(f, g)" with K's reduced basis.
    std::string describe() const;

   private:
    RingPresentation(RingPtr ambient, Ideal defining) : ambient_(std::move(ambient)), defining_(std::move(defining)) {}

    RingPtr ambient_;
    Ideal defining_;
};

QuotientPtr present_ring(std::uint64_t p, std::vector<std::string> variables, OrderKind kind = OrderKind::grevlex);

/// Element of R held by its normal form modulo K.
class RElement {
   public:
    RElement(QuotientPtr ring, const Polynomial& f);

    const QuotientPtr& ring() const noexcept { return ring_; }
    const Polynomial& repr() const noexcept { return repr_; }
    bool is_zero() const noexcept { return repr_.is_zero(); }

    friend RElement operator+(const RElement& a, const RElement& b);
    friend RElement operator-(const RElement& a, const RElement& b);
    friend RElement operator*(const RElement& a, const RElement& b);
    RElement frobenius(const FrobeniusExponent& q) const;

    friend bool operator==(const RElement& a, const RElement& b) { return a.repr_ == b.repr_; }

   private:
    QuotientPtr ring_;
    Polynomial repr_;
};

RElement r_normal_form(const Polynomial& f, const QuotientPtr& ring);

/// Ideal of R, stored by its user generators (reduced mod K, zeros
/// dropped) and its preimage in S (user generators + K).
class RIdeal {
   public:
    RIdeal(QuotientPtr ring, std::vector<Polynomial> generators);

    static RIdeal zero(QuotientPtr ring) { return RIdeal(std::move(ring), {}); }
    static RIdeal unit(QuotientPtr ring);
    /// m = (all variables).
    static RIdeal maximal(QuotientPtr ring);
    static RIdeal generated_by(const std::vector<RElement>& elements);
    /// Ideal of R whose preimage is `lift` (must contain K).
    static RIdeal from_lift(QuotientPtr ring, const Ideal& lift);

    const QuotientPtr& ring() const noexcept { return ring_; }
    std::span<const Polynomial> generators() const noexcept { return generators_; }
    const Ideal& lift() const noexcept { return lift_; }

    bool contains(const Polynomial& f) const { return lift_.contains(f); }
    bool contains(const RElement& f) const { return lift_.contains(f.repr()); }
    bool is_unit() const { return lift_.is_unit(); }
    bool is_zero() const;
    /// Display list: distinct nonzero reductions mod K of the reduced basis of the lift.
    std::vector<Polynomial> canonical_generators() const;

    friend bool operator==(const RIdeal& a, const RIdeal& b);

   private:
    QuotientPtr ring_;
    std::vector<Polynomial> generators_;
    Ideal lift_;
};

RIdeal r_sum(const RIdeal& A, const RIdeal& B);
RIdeal r_product(const RIdeal& A, const RIdeal& B);
RIdeal r_power(const RIdeal& A, std::uint64_t n);
RIdeal r_intersect(const RIdeal& A, const RIdeal& B);
/// (user generators)^[q] + K.
RIdeal r_bracket_power(const RIdeal& A, const FrobeniusExponent& q);
/// Preimage of (A :_R B) is (lift(A) : lift(B)) in S.
RIdeal r_colon(const RIdeal& A, const RIdeal& B);
RIdeal r_colon(const RIdeal& A, const RElement& b);

std::string to_string(const RIdeal& I);

}  // namespace frobkit

#endif
