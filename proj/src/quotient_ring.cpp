#include "frobkit/quotient_ring.hpp"

#include <algorithm>

#include "frobkit/error.hpp"
#include "frobkit/ideal_ops.hpp"

namespace frobkit {

namespace {

void require_same_quotient(const QuotientPtr& a, const QuotientPtr& b) {
    if (a == b) return;
    if (!a->ambient()->same_variables(*b->ambient()) || !(a->ambient()->order() == b->ambient()->order()) ||
        !(a->defining_basis() == b->defining_basis()))
        throw Error(ErrorCode::ArityMismatch, "operands live in different quotient rings");
}

std::vector<Polynomial> with_relations(std::vector<Polynomial> gens, const Ideal& defining) {
    for (const auto& k : defining.groebner().basis()) gens.push_back(k);
    return gens;
}

}  // namespace

QuotientPtr RingPresentation::present(RingPtr ambient, std::vector<Polynomial> relations) {
    Ideal defining(ambient, std::move(relations));
    if (defining.is_unit()) throw Error(ErrorCode::UnitDefiningIdeal, "the defining ideal contains 1");
    // Present by the reduced basis so the lift of every ideal is canonical.
    const auto& basis = defining.groebner().basis();
    Ideal canonical(ambient, std::vector<Polynomial>(basis.begin(), basis.end()));
    (void)canonical.groebner();
    return QuotientPtr(new RingPresentation(std::move(ambient), std::move(canonical)));
}

QuotientPtr present_ring(std::uint64_t p, std::vector<std::string> variables, OrderKind kind) {
    return RingPresentation::present(PolynomialRing::make(PrimeField(p), std::move(variables), kind), {});
}

Polynomial RingPresentation::reduce(const Polynomial& f) const {
    if (!f.ring()->same_variables(*ambient_))
        throw Error(ErrorCode::ArityMismatch, "polynomial does not belong to the ambient ring");
    return normal_form(f.reordered(ambient_), defining_basis());
}

std::string RingPresentation::describe() const {
    std::string out = "GF(" + std::to_string(field().characteristic()) + ")[";
    for (std::size_t i = 0; i < arity(); ++i) {
        if (i != 0) out += ", ";
        out += ambient_->variables()[i];
    }
    out += "]";
    const auto& basis = defining_basis().basis();
    if (!basis.empty()) {
        out += "/(";
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (i != 0) out += ", ";
            out += to_string(basis[i]);
        }
        out += ")";
    }
    return out;
}

RElement::RElement(QuotientPtr ring, const Polynomial& f) : ring_(std::move(ring)), repr_(ring_->reduce(f)) {}

RElement r_normal_form(const Polynomial& f, const QuotientPtr& ring) { return RElement(ring, f); }

RElement operator+(const RElement& a, const RElement& b) {
    require_same_quotient(a.ring_, b.ring_);
    return RElement(a.ring_, a.repr_ + b.repr_);
}

RElement operator-(const RElement& a, const RElement& b) {
    require_same_quotient(a.ring_, b.ring_);
    return RElement(a.ring_, a.repr_ - b.repr_);
}

RElement operator*(const RElement& a, const RElement& b) {
    require_same_quotient(a.ring_, b.ring_);
    return RElement(a.ring_, a.repr_ * b.repr_);
}

RElement RElement::frobenius(const FrobeniusExponent& q) const { return RElement(ring_, frobenius_pow(repr_, q)); }

RIdeal::RIdeal(QuotientPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), lift_(Ideal::zero(ring_->ambient())) {
    for (const auto& g : generators) {
        auto r = ring_->reduce(g);
        if (!r.is_zero()) generators_.push_back(std::move(r));
    }
    lift_ = Ideal(ring_->ambient(), with_relations(generators_, ring_->defining_ideal()));
}

RIdeal RIdeal::unit(QuotientPtr ring) {
    auto one = Polynomial::constant(ring->ambient(), 1);
    return RIdeal(std::move(ring), {std::move(one)});
}

RIdeal RIdeal::maximal(QuotientPtr ring) {
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < ring->arity(); ++i) gens.push_back(Polynomial::variable(ring->ambient(), i));
    return RIdeal(std::move(ring), std::move(gens));
}

RIdeal RIdeal::generated_by(const std::vector<RElement>& elements) {
    if (elements.empty()) throw Error(ErrorCode::InvalidArgument, "generated_by needs at least one element");
    std::vector<Polynomial> gens;
    for (const auto& e : elements) {
        require_same_quotient(elements.front().ring(), e.ring());
        gens.push_back(e.repr());
    }
    return RIdeal(elements.front().ring(), std::move(gens));
}

RIdeal RIdeal::from_lift(QuotientPtr ring, const Ideal& lift) {
    const auto& basis = lift.groebner(ring->ambient()->order()).basis();
    return RIdeal(std::move(ring), std::vector<Polynomial>(basis.begin(), basis.end()));
}

bool RIdeal::is_zero() const { return ideal_equal(lift_, ring_->defining_ideal()); }

std::vector<Polynomial> RIdeal::canonical_generators() const {
    std::vector<Polynomial> out;
    for (const auto& g : lift_.groebner().basis()) {
        auto r = ring_->reduce(g);
        if (!r.is_zero() && std::find(out.begin(), out.end(), r) == out.end()) out.push_back(std::move(r));
    }
    return out;
}

bool operator==(const RIdeal& a, const RIdeal& b) {
    require_same_quotient(a.ring_, b.ring_);
    return ideal_equal(a.lift_, b.lift_);
}

RIdeal r_sum(const RIdeal& A, const RIdeal& B) {
    require_same_quotient(A.ring(), B.ring());
    std::vector<Polynomial> gens(A.generators().begin(), A.generators().end());
    gens.insert(gens.end(), B.generators().begin(), B.generators().end());
    return RIdeal(A.ring(), std::move(gens));
}

RIdeal r_product(const RIdeal& A, const RIdeal& B) {
    require_same_quotient(A.ring(), B.ring());
    std::vector<Polynomial> gens;
    for (const auto& f : A.generators())
        for (const auto& g : B.generators()) gens.push_back(f * g);
    return RIdeal(A.ring(), std::move(gens));
}

RIdeal r_power(const RIdeal& A, std::uint64_t n) {
    auto power = ideal_power(Ideal(A.ring()->ambient(), std::vector<Polynomial>(A.generators().begin(), A.generators().end())), n);
    return RIdeal(A.ring(), std::vector<Polynomial>(power.generators().begin(), power.generators().end()));
}

RIdeal r_intersect(const RIdeal& A, const RIdeal& B) {
    require_same_quotient(A.ring(), B.ring());
    return RIdeal::from_lift(A.ring(), intersect(A.lift(), B.lift()));
}

RIdeal r_bracket_power(const RIdeal& A, const FrobeniusExponent& q) {
    std::vector<Polynomial> gens;
    for (const auto& g : A.generators()) gens.push_back(frobenius_pow(g, q));
    return RIdeal(A.ring(), std::move(gens));
}

RIdeal r_colon(const RIdeal& A, const RIdeal& B) {
    require_same_quotient(A.ring(), B.ring());
    // K ⊆ lift(A), so the relations in lift(B) contribute nothing.
    Ideal divisor(A.ring()->ambient(), std::vector<Polynomial>(B.generators().begin(), B.generators().end()));
    return RIdeal::from_lift(A.ring(), colon(A.lift(), divisor));
}

RIdeal r_colon(const RIdeal& A, const RElement& b) { return r_colon(A, RIdeal::generated_by({b})); }

std::string to_string(const RIdeal& I) {
    std::string out = "ideal(";
    const auto gens = I.canonical_generators();
    if (gens.empty()) out += "0";
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (i != 0) out += ", ";
        out += to_string(gens[i]);
    }
    return out + ")";
}

}  // namespace frobkit
