#include "frobkit/ideal.hpp"

#include <algorithm>

#include "frobkit/error.hpp"

namespace frobkit {

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<GbCache>()) {
    generators_.reserve(generators.size());
    for (auto& g : generators) generators_.push_back(g.reordered(ring_));
}

Ideal Ideal::unit(RingPtr ring) {
    auto one = Polynomial::constant(ring, 1);
    return Ideal(std::move(ring), {std::move(one)});
}

std::vector<Polynomial> Ideal::nonzero_generators() const {
    std::vector<Polynomial> out;
    for (const auto& g : generators_)
        if (!g.is_zero()) out.push_back(g);
    return out;
}

bool Ideal::has_zero_generators_only() const noexcept {
    return std::all_of(generators_.begin(), generators_.end(), [](const Polynomial& g) { return g.is_zero(); });
}

const ReducedGB& Ideal::groebner(const MonomialOrder& order) const {
    {
        std::lock_guard lock(cache_->mutex);
        for (const auto& [o, gb] : cache_->entries)
            if (o == order) return *gb;
    }
    auto target = order == ring_->order() ? ring_ : ring_->with_order(order);
    auto gb = std::make_shared<const ReducedGB>(buchberger(generators_, target));
    std::lock_guard lock(cache_->mutex);
    // A racing thread may have filled the slot; canonicity makes both equal.
    for (const auto& [o, existing] : cache_->entries)
        if (o == order) return *existing;
    cache_->entries.emplace_back(order, gb);
    return *gb;
}

bool Ideal::contains(const Polynomial& f) const {
    if (f.is_zero()) return true;
    const auto& gb = groebner();
    return normal_form(f.reordered(ring_), gb).is_zero();
}

bool ideal_member(const Polynomial& f, const Ideal& I) {
    if (!f.ring()->same_variables(*I.ring()))
        throw Error(ErrorCode::ArityMismatch, "element and ideal live in different rings");
    return I.contains(f);
}

bool ideal_equal(const Ideal& I, const Ideal& J, const MonomialOrder& order) {
    if (!I.ring()->same_variables(*J.ring())) throw Error(ErrorCode::ArityMismatch, "ideals live in different rings");
    return I.groebner(order) == J.groebner(order);
}

bool ideal_equal(const Ideal& I, const Ideal& J) { return ideal_equal(I, J, I.ring()->order()); }

Ideal eliminate(const Ideal& I, const std::vector<std::size_t>& drop_variables) {
    const auto& ring = I.ring();
    for (auto v : drop_variables)
        if (v >= ring->arity()) throw Error(ErrorCode::InvalidArgument, "elimination variable out of range");
    if (drop_variables.empty()) {
        const auto& basis = I.groebner().basis();
        return Ideal(ring, std::vector<Polynomial>(basis.begin(), basis.end()));
    }
    const auto& gb = I.groebner(ring->order().eliminating(drop_variables));
    std::vector<Polynomial> kept;
    for (const auto& g : gb.basis()) {
        bool free = std::none_of(drop_variables.begin(), drop_variables.end(), [&](std::size_t v) { return g.involves(v); });
        if (free) kept.push_back(g.reordered(ring));
    }
    return Ideal(ring, std::move(kept));
}

}  // namespace frobkit
