#ifndef FROBKIT_CONDITIONS_HPP
#define FROBKIT_CONDITIONS_HPP

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "frobkit/invariants.hpp"
#include "frobkit/quotient_ring.hpp"

namespace frobkit {

inline constexpr std::string_view scope_note = "at the origin; sampled, not a proof of the universal statement";

enum class Verdict { holds_on_all_tested, violated };
std::string_view to_string(Verdict v) noexcept;

/// Instance ((x_1..x_i) : y)^[q] = ((x_1^q..x_i^q) : y^q); i = 0 uses the zero ideal.
struct ConditionQuery {
    QuotientPtr ring;
    std::vector<RElement> xs;
    RElement y;
    std::vector<FrobeniusExponent> qs;
};

/// A failing instance. For element queries `first` holds xs and `second`
/// holds y; for ideal pairs they hold the generators of I and J.
struct Witness {
    bool ideal_pair = false;
    std::vector<Polynomial> first;
    std::vector<Polynomial> second;
    std::uint64_t q = 1;
    std::vector<Polynomial> lhs;  // canonical generators of the bracketed colon
    std::vector<Polynomial> rhs;  // canonical generators of the colon of brackets
    Polynomial separator;         // in rhs, not in lhs
};

struct ConditionReport {
    Verdict verdict = Verdict::holds_on_all_tested;
    std::optional<Witness> witness;
    std::uint64_t samples_tested = 0;
};

ConditionReport check_ci_instance(const ConditionQuery& query);

/// (I : J)^[q] = (I^[q] : J^[q]) for each q.
ConditionReport check_ideal_pair(const RIdeal& I, const RIdeal& J, const std::vector<FrobeniusExponent>& qs);

/// Element instances with |xs| = i: every tuple of monomials of degree
/// 1..degree_bound first, then random polynomials with at most 3 terms.
/// `sample_budget` caps the total number of instances.
ConditionReport search_violation(const QuotientPtr& R, std::size_t i, std::uint32_t degree_bound,
                                 const std::vector<FrobeniusExponent>& qs, std::uint64_t sample_budget,
                                 std::uint64_t seed);

/// Ideal pairs: principal monomial pairs first, then random ideals with
/// up to `max_generators` generators.
ConditionReport search_pair_violation(const QuotientPtr& R, std::uint32_t degree_bound,
                                      const std::vector<FrobeniusExponent>& qs, std::uint64_t sample_budget,
                                      std::uint64_t seed, std::size_t max_generators = 3);

enum class Relation { equal, strict_less };
std::string_view to_string(Relation r) noexcept;

struct LengthFormulaRow {
    std::uint64_t q;
    std::uint64_t lhs;  // λ(R/I^[q])
    std::uint64_t rhs;  // λ(J/I)·λ(R/m^[q]) + λ(R/J^[q])
    Relation relation;
};

struct LengthFormulaReport {
    std::uint64_t colength_between;  // λ(J/I)
    std::vector<LengthFormulaRow> rows;
};

/// ContainmentViolated unless I ⊆ J; NotPrimaryAtOrigin unless I is
/// origin-primary.
LengthFormulaReport check_length_formula(const RIdeal& I, const RIdeal& J, const std::vector<FrobeniusExponent>& qs);

struct PrincipalityReport {
    RIdeal colon;
    std::size_t mu;
    std::optional<Polynomial> generator;  // present when mu == 1

    bool is_principal() const noexcept { return mu <= 1; }
};

/// ((x) : y) with its minimal generator count; x and y homogeneous.
PrincipalityReport colon_principality(const RElement& x, const RElement& y);

struct DiagnoseConfig {
    std::uint32_t degree_bound = 2;
    unsigned e_max = 2;
    std::uint64_t sample_budget = 60;
    std::uint64_t pair_budget = 30;
    std::uint64_t seed = 0;
    std::vector<FrobeniusExponent> qs;  // empty: (p, p^2)
};

struct Diagnosis {
    bool regular;  // decided by the Kunz test at q = p
    HKSeries hk;
    ConditionReport domain;  // C_0 search
    ConditionReport ufd;     // C_1 search
    ConditionReport pairs;   // ideal-pair search
};

Diagnosis diagnose(const QuotientPtr& R, const DiagnoseConfig& config);

/// (p, p^2), skipping powers above the exponent cap.
std::vector<FrobeniusExponent> default_exponents(const PrimeField& field);

}  // namespace frobkit

#endif
