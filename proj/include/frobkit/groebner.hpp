#ifndef FROBKIT_GROEBNER_HPP
#define FROBKIT_GROEBNER_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "frobkit/polynomial.hpp"

namespace frobkit {

/// The reduced Groebner basis of an ideal under one order: monic,
/// auto-reduced, sorted by increasing leading monomial. Equal ideals have
/// equal ReducedGBs, which is what ideal equality is decided by.
class ReducedGB {
   public:
    /// Basis of the zero ideal.
    explicit ReducedGB(RingPtr ring) : ring_(std::move(ring)) {}

    const RingPtr& ring() const noexcept { return ring_; }
    const MonomialOrder& order() const noexcept { return ring_->order(); }
    std::span<const Polynomial> basis() const noexcept { return basis_; }
    std::size_t size() const noexcept { return basis_.size(); }
    bool is_zero_ideal() const noexcept { return basis_.empty(); }
    bool is_unit_ideal() const noexcept { return basis_.size() == 1 && basis_.front().is_constant(); }

    /// Wraps an externally supplied basis (e.g. from a cache) after checking
    /// the reduced-basis shape; returns nullopt if the shape is wrong.
    static std::optional<ReducedGB> adopt(RingPtr ring, std::vector<Polynomial> basis);

    friend bool operator==(const ReducedGB& a, const ReducedGB& b);

   private:
    friend class BuchbergerRun;
    ReducedGB(RingPtr ring, std::vector<Polynomial> basis) : ring_(std::move(ring)), basis_(std::move(basis)) {}

    RingPtr ring_;
    std::vector<Polynomial> basis_;
};

/// Remainder of f modulo G; no term of the result is divisible by a
/// leading monomial of G. Throws OrderMismatch if f uses another order.
Polynomial normal_form(const Polynomial& f, const ReducedGB& G);

struct DivisionResult {
    std::vector<Polynomial> quotients;
    Polynomial remainder;
};

/// Multivariate division by an ordered list (first divisible divisor wins).
DivisionResult divide(const Polynomial& f, std::span<const Polynomial> divisors);

/// Persistent store for computed bases, consulted before every run.
class GbStore {
   public:
    virtual ~GbStore() = default;
    virtual std::optional<std::vector<Polynomial>> load(const RingPtr& ring, std::span<const Polynomial> generators) = 0;
    virtual void save(const RingPtr& ring, std::span<const Polynomial> generators, const ReducedGB& gb) = 0;
};

struct EngineSettings {
    /// Cap on S-pair reductions per basis computation.
    std::uint64_t reduction_budget = 1'000'000;
    GbStore* store = nullptr;
};

/// Settings in effect on the calling thread.
const EngineSettings& engine_settings() noexcept;

/// Installs settings for the current thread until destroyed.
class EngineScope {
   public:
    explicit EngineScope(EngineSettings settings);
    ~EngineScope();
    EngineScope(const EngineScope&) = delete;
    EngineScope& operator=(const EngineScope&) = delete;

   private:
    EngineSettings previous_;
};

/// Buchberger's algorithm with the normal selection strategy and the
/// Gebauer-Moeller criteria. Generators are moved into `ring` (same
/// variables, possibly another order) first. Throws BudgetExceeded.
ReducedGB buchberger(std::span<const Polynomial> generators, const RingPtr& ring);

}  // namespace frobkit

#endif
