#include "frobkit/groebner.hpp"

#include <algorithm>
#include <string>
#include <tuple>

#include "frobkit/error.hpp"

namespace frobkit {

namespace {

thread_local EngineSettings current_settings{};

/// Support bitmask; a nonzero `mask(a) & ~mask(b)` proves a does not divide b.
std::uint64_t support_mask(const Monomial& m) noexcept {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < m.arity(); ++i)
        if (m[i] != 0) mask |= std::uint64_t{1} << (i % 64);
    return mask;
}

bool lm_less(const MonomialOrder& order, const Polynomial& a, const Polynomial& b) {
    return order.compare_unchecked(a.leading_monomial(), b.leading_monomial()) == std::strong_ordering::less;
}

/// Reducer set with cached leading data.
class Reducers {
   public:
    void add(const Polynomial* g) {
        polys_.push_back(g);
        masks_.push_back(support_mask(g->leading_monomial()));
    }
    void clear() {
        polys_.clear();
        masks_.clear();
    }

    const Polynomial* find_divisor(const Monomial& m) const noexcept {
        const auto mask = support_mask(m);
        for (std::size_t k = 0; k < polys_.size(); ++k) {
            if ((masks_[k] & ~mask) != 0) continue;
            if (polys_[k]->leading_monomial().divides(m)) return polys_[k];
        }
        return nullptr;
    }

   private:
    std::vector<const Polynomial*> polys_;
    std::vector<std::uint64_t> masks_;
};

Polynomial full_reduce(Polynomial h, const Reducers& reducers) {
    const auto& field = h.field();
    std::vector<Term> remainder;
    while (!h.is_zero()) {
        const auto& lt = h.leading_term();
        if (const Polynomial* g = reducers.find_divisor(lt.monomial)) {
            auto c = field.mul(lt.coeff, field.inv(g->leading_coeff()));
            auto m = lt.monomial.quotient(g->leading_monomial());
            h.subtract_multiple(c, m, *g);
        } else {
            remainder.push_back(h.pop_leading());
        }
    }
    // Remainder terms were emitted in decreasing order already.
    return Polynomial::from_terms(h.ring(), std::move(remainder));
}

}  // namespace

const EngineSettings& engine_settings() noexcept { return current_settings; }

EngineScope::EngineScope(EngineSettings settings) : previous_(current_settings) { current_settings = settings; }

EngineScope::~EngineScope() { current_settings = previous_; }

std::optional<ReducedGB> ReducedGB::adopt(RingPtr ring, std::vector<Polynomial> basis) {
    const auto& order = ring->order();
    for (auto& g : basis) {
        if (g.is_zero() || g.leading_coeff() != 1) return std::nullopt;
        g = g.reordered(ring);
    }
    for (std::size_t i = 0; i + 1 < basis.size(); ++i)
        if (!lm_less(order, basis[i], basis[i + 1])) return std::nullopt;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j) continue;
            for (const auto& t : basis[j].terms())
                if (basis[i].leading_monomial().divides(t.monomial)) return std::nullopt;
        }
    return ReducedGB(std::move(ring), std::move(basis));
}

bool operator==(const ReducedGB& a, const ReducedGB& b) {
    if (!a.ring_->same_variables(*b.ring_) || !(a.order() == b.order())) return false;
    return a.basis_ == b.basis_;
}

Polynomial normal_form(const Polynomial& f, const ReducedGB& G) {
    require_compatible(*f.ring(), *G.ring());
    Reducers reducers;
    for (const auto& g : G.basis()) reducers.add(&g);
    return full_reduce(f, reducers);
}

DivisionResult divide(const Polynomial& f, std::span<const Polynomial> divisors) {
    const auto& field = f.field();
    DivisionResult result{{}, Polynomial(f.ring())};
    for (const auto& g : divisors) {
        require_compatible(*f.ring(), *g.ring());
        result.quotients.emplace_back(f.ring());
    }
    std::vector<Term> remainder;
    Polynomial p = f;
    while (!p.is_zero()) {
        const auto lt = p.leading_term();
        bool divided = false;
        for (std::size_t i = 0; i < divisors.size() && !divided; ++i) {
            const auto& g = divisors[i];
            if (g.is_zero() || !g.leading_monomial().divides(lt.monomial)) continue;
            auto c = field.mul(lt.coeff, field.inv(g.leading_coeff()));
            auto m = lt.monomial.quotient(g.leading_monomial());
            result.quotients[i] += Polynomial::monomial(f.ring(), m, c);
            p.subtract_multiple(c, m, g);
            divided = true;
        }
        if (!divided) remainder.push_back(p.pop_leading());
    }
    result.remainder = Polynomial::from_terms(f.ring(), std::move(remainder));
    return result;
}

class BuchbergerRun {
   public:
    BuchbergerRun(RingPtr ring, std::uint64_t budget) : ring_(std::move(ring)), order_(ring_->order()), budget_(budget) {}

    ReducedGB run(std::vector<Polynomial> input) {
        std::sort(input.begin(), input.end(), [&](const Polynomial& a, const Polynomial& b) { return lm_less(order_, a, b); });
        for (auto& f : input) {
            auto h = top_reduce(std::move(f));
            if (!h.is_zero()) insert(h.monic());
        }
        while (!pairs_.empty()) {
            auto pair = pop_pair();
            if (++reductions_ > budget_)
                throw Error(ErrorCode::BudgetExceeded,
                            "Groebner basis computation exceeded " + std::to_string(budget_) + " S-pair reductions");
            auto h = top_reduce(s_polynomial(pair));
            if (!h.is_zero()) insert(h.monic());
        }
        return finish();
    }

   private:
    struct Pair {
        std::size_t i;
        std::size_t j;
        Monomial lcm;
    };

    const Monomial& lm(std::size_t k) const { return polys_[k].leading_monomial(); }

    void rebuild_reducers() {
        reducers_.clear();
        for (std::size_t k = 0; k < polys_.size(); ++k)
            if (active_[k]) reducers_.add(&polys_[k]);
    }

    Polynomial top_reduce(Polynomial f) const {
        while (!f.is_zero()) {
            const auto& lt = f.leading_term();
            const Polynomial* g = reducers_.find_divisor(lt.monomial);
            if (g == nullptr) break;
            // Reducers are monic.
            auto c = lt.coeff;
            auto m = lt.monomial.quotient(g->leading_monomial());
            f.subtract_multiple(c, m, *g);
        }
        return f;
    }

    Polynomial s_polynomial(const Pair& pair) const {
        const auto& f = polys_[pair.i];
        const auto& g = polys_[pair.j];
        auto s = f.times_term(pair.lcm.quotient(f.leading_monomial()), 1);
        s.subtract_multiple(1, pair.lcm.quotient(g.leading_monomial()), g);
        return s;
    }

    /// Normal strategy: smallest lcm degree, then smallest lcm, then indices.
    Pair pop_pair() {
        std::size_t best = 0;
        for (std::size_t k = 1; k < pairs_.size(); ++k) {
            const auto& a = pairs_[k];
            const auto& b = pairs_[best];
            if (a.lcm.degree() != b.lcm.degree()) {
                if (a.lcm.degree() < b.lcm.degree()) best = k;
                continue;
            }
            auto c = order_.compare_unchecked(a.lcm, b.lcm);
            if (c == std::strong_ordering::less || (c == std::strong_ordering::equal && std::tie(a.j, a.i) < std::tie(b.j, b.i)))
                best = k;
        }
        Pair p = std::move(pairs_[best]);
        pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
        return p;
    }

    /// Gebauer-Moeller update with the new element h.
    void insert(Polynomial h_poly) {
        const std::size_t h = polys_.size();
        polys_.push_back(std::move(h_poly));
        active_.push_back(false);
        const Monomial& lh = lm(h);

        std::vector<Pair> candidates;
        for (std::size_t g = 0; g < h; ++g)
            if (active_[g]) candidates.push_back({g, h, lcm(lm(g), lh)});

        std::vector<Pair> kept;
        for (std::size_t k = 0; k < candidates.size(); ++k) {
            const auto& cand = candidates[k];
            bool keep = coprime(lm(cand.i), lh);
            if (!keep) {
                keep = true;
                for (std::size_t r = k + 1; r < candidates.size() && keep; ++r)
                    if (candidates[r].lcm.divides(cand.lcm)) keep = false;
                for (const auto& d : kept)
                    if (keep && d.lcm.divides(cand.lcm)) keep = false;
            }
            if (keep) kept.push_back(cand);
        }

        std::vector<Pair> updated;
        for (auto& p : pairs_) {
            bool drop = lh.divides(p.lcm) && !(lcm(lm(p.i), lh) == p.lcm) && !(lcm(lm(p.j), lh) == p.lcm);
            if (!drop) updated.push_back(std::move(p));
        }
        for (auto& d : kept)
            if (!coprime(lm(d.i), lh)) updated.push_back(std::move(d));
        pairs_ = std::move(updated);

        for (std::size_t g = 0; g < h; ++g)
            if (active_[g] && lh.divides(lm(g))) active_[g] = false;
        active_[h] = true;
        rebuild_reducers();
    }

    ReducedGB finish() {
        std::vector<Polynomial> basis;
        for (std::size_t k = 0; k < polys_.size(); ++k)
            if (active_[k]) basis.push_back(polys_[k]);
        if (basis.size() == 1 && basis.front().is_constant()) return ReducedGB(ring_, std::move(basis));
        std::vector<Polynomial> reduced;
        reduced.reserve(basis.size());
        for (std::size_t k = 0; k < basis.size(); ++k) {
            Reducers others;
            for (std::size_t r = 0; r < basis.size(); ++r)
                if (r != k) others.add(&basis[r]);
            auto g = basis[k];
            auto lead = g.pop_leading();
            auto tail = full_reduce(std::move(g), others);
            reduced.push_back(Polynomial::monomial(ring_, lead.monomial, lead.coeff) + tail);
        }
        std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) { return lm_less(order_, a, b); });
        return ReducedGB(ring_, std::move(reduced));
    }

    RingPtr ring_;
    const MonomialOrder& order_;
    std::uint64_t budget_;
    std::uint64_t reductions_ = 0;
    std::vector<Polynomial> polys_;
    std::vector<bool> active_;
    std::vector<Pair> pairs_;
    Reducers reducers_;
};

ReducedGB buchberger(std::span<const Polynomial> generators, const RingPtr& ring) {
    std::vector<Polynomial> input;
    for (const auto& g : generators) {
        if (!g.ring()->same_variables(*ring))
            throw Error(ErrorCode::ArityMismatch, "generator lives in a different polynomial ring");
        if (!g.is_zero()) input.push_back(g.reordered(ring));
    }
    if (input.empty()) return ReducedGB(ring);
    for (const auto& g : input)
        if (g.is_constant()) return *ReducedGB::adopt(ring, {Polynomial::constant(ring, 1)});

    const auto& settings = engine_settings();
    if (settings.store != nullptr) {
        if (auto cached = settings.store->load(ring, input)) {
            if (auto gb = ReducedGB::adopt(ring, std::move(*cached))) return std::move(*gb);
        }
    }
    auto gb = BuchbergerRun(ring, settings.reduction_budget).run(input);
    if (settings.store != nullptr) settings.store->save(ring, input, gb);
    return gb;
}

}  // namespace frobkit
