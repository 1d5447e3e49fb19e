#ifndef FROBKIT_IDEAL_HPP
#define FROBKIT_IDEAL_HPP

#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "frobkit/groebner.hpp"

namespace frobkit {

/// Finitely generated ideal of a polynomial ring.
///
/// Immutable. The reduced basis per order is computed on first request and
/// cached; copies of an Ideal share that cache.
class Ideal {
   public:
    /// Generators are moved into `ring` (same variables required).
    Ideal(RingPtr ring, std::vector<Polynomial> generators);

    static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
    static Ideal unit(RingPtr ring);

    const RingPtr& ring() const noexcept { return ring_; }
    std::span<const Polynomial> generators() const noexcept { return generators_; }
    /// Generators with zeros removed.
    std::vector<Polynomial> nonzero_generators() const;
    bool has_zero_generators_only() const noexcept;

    /// Reduced basis under the ring's own order.
    const ReducedGB& groebner() const { return groebner(ring_->order()); }
    const ReducedGB& groebner(const MonomialOrder& order) const;

    bool contains(const Polynomial& f) const;
    bool is_unit() const { return groebner().is_unit_ideal(); }
    bool is_zero() const { return groebner().is_zero_ideal(); }

   private:
    struct GbCache {
        std::mutex mutex;
        std::vector<std::pair<MonomialOrder, std::shared_ptr<const ReducedGB>>> entries;
    };

    RingPtr ring_;
    std::vector<Polynomial> generators_;
    std::shared_ptr<GbCache> cache_;
};

/// f in I, decided by the normal form against the reduced basis.
bool ideal_member(const Polynomial& f, const Ideal& I);

/// I == J, decided by comparing reduced bases under `order`.
bool ideal_equal(const Ideal& I, const Ideal& J, const MonomialOrder& order);
bool ideal_equal(const Ideal& I, const Ideal& J);

/// I ∩ k[remaining variables] via a two-block elimination order. The
/// result is an ideal of the original ring.
Ideal eliminate(const Ideal& I, const std::vector<std::size_t>& drop_variables);

}  // namespace frobkit

#endif
