#include "frobkit/polynomial.hpp"

#include <algorithm>

#include "frobkit/error.hpp"

namespace frobkit {

PolynomialRing::PolynomialRing(PrimeField field, std::vector<std::string> variables, MonomialOrder order)
    : field_(field), variables_(std::move(variables)), order_(std::move(order)) {
    if (order_.arity() != variables_.size())
        throw Error(ErrorCode::ArityMismatch, "order arity differs from the number of variables");
    for (std::size_t i = 0; i < variables_.size(); ++i)
        for (std::size_t j = i + 1; j < variables_.size(); ++j)
            if (variables_[i] == variables_[j])
                throw Error(ErrorCode::InvalidArgument, "duplicate variable '" + variables_[i] + "'");
}

RingPtr PolynomialRing::make(PrimeField field, std::vector<std::string> variables, MonomialOrder order) {
    return RingPtr(new PolynomialRing(field, std::move(variables), std::move(order)));
}

RingPtr PolynomialRing::make(PrimeField field, std::vector<std::string> variables, OrderKind kind) {
    auto order = MonomialOrder::standard(kind, variables.size());
    return make(field, std::move(variables), std::move(order));
}

std::optional<std::size_t> PolynomialRing::variable_index(std::string_view name) const noexcept {
    for (std::size_t i = 0; i < variables_.size(); ++i)
        if (variables_[i] == name) return i;
    return std::nullopt;
}

RingPtr PolynomialRing::with_order(MonomialOrder order) const { return make(field_, variables_, std::move(order)); }

RingPtr PolynomialRing::extended_by_fresh_variable() const {
    std::string name = "_t";
    for (int k = 1; variable_index(name); ++k) name = "_t" + std::to_string(k);
    auto variables = variables_;
    variables.push_back(name);
    return make(field_, std::move(variables), order_.with_leading_block(1));
}

void require_compatible(const PolynomialRing& a, const PolynomialRing& b) {
    if (&a == &b) return;
    if (!a.same_variables(b))
        throw Error(ErrorCode::ArityMismatch, "operands live in different polynomial rings");
    if (!(a.order() == b.order()))
        throw Error(ErrorCode::OrderMismatch, "operands use different monomial orders (" + a.order().describe() +
                                                  " vs " + b.order().describe() + ")");
}

Polynomial Polynomial::constant(RingPtr ring, std::int64_t value) {
    auto c = ring->field().reduce(value);
    Polynomial f(std::move(ring));
    if (c != 0) f.terms_.push_back({Monomial(f.ring_->arity()), c});
    return f;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
    if (index >= ring->arity()) throw Error(ErrorCode::ArityMismatch, "variable index out of range");
    auto m = Monomial::variable(ring->arity(), index);
    return monomial(std::move(ring), std::move(m));
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial m, PrimeField::Element coeff) {
    if (m.arity() != ring->arity()) throw Error(ErrorCode::ArityMismatch, "monomial arity does not match ring");
    Polynomial f(std::move(ring));
    coeff %= f.field().characteristic();
    if (coeff != 0) f.terms_.push_back({std::move(m), coeff});
    return f;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
    const auto& order = ring->order();
    const auto& field = ring->field();
    for (const auto& t : terms)
        if (t.monomial.arity() != ring->arity()) throw Error(ErrorCode::ArityMismatch, "term arity does not match ring");
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
        return order.compare_unchecked(a.monomial, b.monomial) == std::strong_ordering::greater;
    });
    std::vector<Term> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
        t.coeff %= field.characteristic();
        if (!out.empty() && out.back().monomial == t.monomial) {
            out.back().coeff = field.add(out.back().coeff, t.coeff);
            if (out.back().coeff == 0) out.pop_back();
        } else if (t.coeff != 0) {
            out.push_back(std::move(t));
        }
    }
    return Polynomial(std::move(ring), std::move(out));
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw Error(ErrorCode::InvalidArgument, "the zero polynomial has no leading term");
    return terms_.front();
}

std::uint64_t Polynomial::total_degree() const noexcept {
    std::uint64_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
    return d;
}

bool Polynomial::is_homogeneous() const noexcept {
    for (const auto& t : terms_)
        if (t.monomial.degree() != terms_.front().monomial.degree()) return false;
    return true;
}

bool Polynomial::involves(std::size_t index) const noexcept {
    for (const auto& t : terms_)
        if (t.monomial[index] != 0) return true;
    return false;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coeff = field().neg(t.coeff);
    return r;
}

void Polynomial::combine(const Polynomial& rhs, bool subtract) {
    require_compatible(*ring_, *rhs.ring_);
    const auto& order = ring_->order();
    const auto& field = ring_->field();
    std::vector<Term> out;
    out.reserve(terms_.size() + rhs.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < rhs.terms_.size()) {
        if (j == rhs.terms_.size()) {
            out.push_back(std::move(terms_[i++]));
            continue;
        }
        auto other = subtract ? field.neg(rhs.terms_[j].coeff) : rhs.terms_[j].coeff;
        if (i == terms_.size()) {
            out.push_back({rhs.terms_[j++].monomial, other});
            continue;
        }
        auto c = order.compare_unchecked(terms_[i].monomial, rhs.terms_[j].monomial);
        if (c == std::strong_ordering::greater) {
            out.push_back(std::move(terms_[i++]));
        } else if (c == std::strong_ordering::less) {
            out.push_back({rhs.terms_[j++].monomial, other});
        } else {
            auto s = field.add(terms_[i].coeff, other);
            if (s != 0) out.push_back({std::move(terms_[i].monomial), s});
            ++i;
            ++j;
        }
    }
    terms_ = std::move(out);
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    combine(rhs, false);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    combine(rhs, true);
    return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    require_compatible(*lhs.ring_, *rhs.ring_);
    if (lhs.is_zero() || rhs.is_zero()) return Polynomial(lhs.ring_);
    const auto& field = lhs.field();
    std::vector<Term> products;
    products.reserve(lhs.size() * rhs.size());
    for (const auto& a : lhs.terms_)
        for (const auto& b : rhs.terms_) products.push_back({a.monomial * b.monomial, field.mul(a.coeff, b.coeff)});
    return Polynomial::from_terms(lhs.ring_, std::move(products));
}

Polynomial Polynomial::scaled(PrimeField::Element c) const {
    c %= field().characteristic();
    if (c == 0) return Polynomial(ring_);
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coeff = field().mul(t.coeff, c);
    return r;
}

Polynomial Polynomial::times_term(const Monomial& m, PrimeField::Element c) const {
    c %= field().characteristic();
    if (c == 0) return Polynomial(ring_);
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    // Multiplying by a monomial preserves the order of terms.
    for (const auto& t : terms_) r.terms_.push_back({t.monomial * m, field().mul(t.coeff, c)});
    return r;
}

void Polynomial::subtract_multiple(PrimeField::Element c, const Monomial& m, const Polynomial& g) {
    require_compatible(*ring_, *g.ring_);
    const auto& order = ring_->order();
    const auto& field = ring_->field();
    c %= field.characteristic();
    if (c == 0) return;
    const auto negc = field.neg(c);
    std::vector<Term> out;
    out.reserve(terms_.size() + g.terms_.size());
    std::size_t i = 0, j = 0;
    Monomial shifted;
    bool have_shifted = false;
    while (i < terms_.size() || j < g.terms_.size()) {
        if (j < g.terms_.size() && !have_shifted) {
            shifted = g.terms_[j].monomial * m;
            have_shifted = true;
        }
        if (j == g.terms_.size()) {
            out.push_back(std::move(terms_[i++]));
            continue;
        }
        auto other = field.mul(negc, g.terms_[j].coeff);
        if (i == terms_.size()) {
            out.push_back({std::move(shifted), other});
            have_shifted = false;
            ++j;
            continue;
        }
        auto cmp = order.compare_unchecked(terms_[i].monomial, shifted);
        if (cmp == std::strong_ordering::greater) {
            out.push_back(std::move(terms_[i++]));
        } else if (cmp == std::strong_ordering::less) {
            out.push_back({std::move(shifted), other});
            have_shifted = false;
            ++j;
        } else {
            auto s = field.add(terms_[i].coeff, other);
            if (s != 0) out.push_back({std::move(terms_[i].monomial), s});
            ++i;
            ++j;
            have_shifted = false;
        }
    }
    terms_ = std::move(out);
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return scaled(field().inv(leading_coeff()));
}

Term Polynomial::pop_leading() {
    Term t = leading_term();
    terms_.erase(terms_.begin());
    return t;
}

Polynomial Polynomial::reordered(const RingPtr& target) const {
    if (!ring_->same_variables(*target))
        throw Error(ErrorCode::ArityMismatch, "reordering requires identical variables and field");
    if (ring_->order() == target->order()) return Polynomial(target, terms_);
    return from_terms(target, terms_);
}

Polynomial Polynomial::embedded(const RingPtr& target) const {
    if (!(target->field() == field()) || target->arity() < ring_->arity() ||
        !std::equal(ring_->variables().begin(), ring_->variables().end(), target->variables().begin()))
        throw Error(ErrorCode::ArityMismatch, "target ring does not extend the source ring");
    std::vector<Term> terms;
    terms.reserve(terms_.size());
    for (const auto& t : terms_) terms.push_back({t.monomial.resized(target->arity()), t.coeff});
    return from_terms(target, std::move(terms));
}

Polynomial Polynomial::projected(const RingPtr& target) const {
    if (!(target->field() == field()) || target->arity() > ring_->arity() ||
        !std::equal(target->variables().begin(), target->variables().end(), ring_->variables().begin()))
        throw Error(ErrorCode::ArityMismatch, "target ring is not a prefix of the source ring");
    std::vector<Term> terms;
    terms.reserve(terms_.size());
    for (const auto& t : terms_) {
        for (std::size_t i = target->arity(); i < ring_->arity(); ++i)
            if (t.monomial[i] != 0) throw Error(ErrorCode::InvalidArgument, "projection drops an occurring variable");
        terms.push_back({t.monomial.resized(target->arity()), t.coeff});
    }
    return from_terms(target, std::move(terms));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (!a.ring_->same_variables(*b.ring_)) return false;
    if (a.ring_->order() == b.ring_->order()) return a.terms_ == b.terms_;
    return a.terms_ == b.reordered(a.ring_).terms_;
}

Polynomial pow(const Polynomial& f, std::uint64_t n) {
    Polynomial result = Polynomial::constant(f.ring(), 1);
    Polynomial base = f;
    while (n != 0) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n != 0) base = base * base;
    }
    return result;
}

Polynomial frobenius_pow(const Polynomial& f, const FrobeniusExponent& q) {
    const auto& field = f.field();
    if (q.characteristic() != field.characteristic())
        throw Error(ErrorCode::InvalidFrobeniusExponent, "q = " + std::to_string(q.q()) +
                                                             " is not a power of the characteristic " +
                                                             std::to_string(field.characteristic()));
    std::vector<Term> terms;
    terms.reserve(f.size());
    for (const auto& t : f.terms()) terms.push_back({t.monomial.pow(q.q()), field.pow(t.coeff, q.q())});
    // m -> m^q is strictly monotone for every term order, so sorting is a no-op pass.
    return Polynomial::from_terms(f.ring(), std::move(terms));
}

std::string to_string(const PolynomialRing& ring, const Monomial& m) {
    std::string out;
    for (std::size_t i = 0; i < m.arity(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += ring.variables()[i];
        if (m[i] != 1) out += '^' + std::to_string(m[i]);
    }
    return out;
}

std::string to_string(const Polynomial& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (const auto& t : f.terms()) {
        if (!out.empty()) out += " + ";
        if (t.monomial.is_one()) {
            out += std::to_string(t.coeff);
        } else {
            if (t.coeff != 1) out += std::to_string(t.coeff) + "*";
            out += to_string(*f.ring(), t.monomial);
        }
    }
    return out;
}

}  // namespace frobkit
