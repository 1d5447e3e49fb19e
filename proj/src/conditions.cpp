#include "frobkit/conditions.hpp"

#include <algorithm>
#include <random>

#include "frobkit/error.hpp"

namespace frobkit {

namespace {

/// Separating element of rhs over lhs, or nothing when they are equal.
std::optional<Polynomial> separate(const RIdeal& lhs, const RIdeal& rhs) {
    if (lhs == rhs) return std::nullopt;
    for (const auto& w : rhs.canonical_generators()) {
        if (lhs.contains(w)) continue;
        if (!rhs.contains(w)) throw Error(ErrorCode::InternalError, "witness failed to re-verify");
        return w;
    }
    throw Error(ErrorCode::InternalError, "bracketed colon is not contained in the colon of brackets");
}

std::vector<Polynomial> reprs(const std::vector<RElement>& elements) {
    std::vector<Polynomial> out;
    for (const auto& e : elements) out.push_back(e.repr());
    return out;
}

/// Monomials of degree lo..hi, by degree and then descending in the ring order.
std::vector<Polynomial> monomials_up_to(const RingPtr& S, std::uint32_t lo, std::uint32_t hi) {
    std::vector<Polynomial> out;
    const std::size_t n = S->arity();
    std::vector<Monomial::Exponent> e(n, 0);
    auto emit = [&](auto&& self, std::size_t i, std::uint32_t left) -> void {
        if (i + 1 >= n) {
            if (n != 0) e[n - 1] = left;
            if (n != 0 || left == 0) out.push_back(Polynomial::monomial(S, Monomial(e)));
            return;
        }
        for (std::uint32_t a = 0; a <= left; ++a) {
            e[i] = a;
            self(self, i + 1, left - a);
        }
        e[i] = 0;
    };
    for (std::uint32_t d = lo; d <= hi; ++d) emit(emit, 0, d);
    std::stable_sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
        const auto& ma = a.leading_monomial();
        const auto& mb = b.leading_monomial();
        if (ma.degree() != mb.degree()) return ma.degree() < mb.degree();
        return S->order().compare(ma, mb) > 0;
    });
    return out;
}

class Sampler {
   public:
    Sampler(const RingPtr& S, std::uint32_t degree_bound, std::uint64_t seed)
        : ring_(S), monomials_(monomials_up_to(S, 0, degree_bound)), rng_(seed) {}

    /// At most 3 terms, coefficients in F_p^x.
    Polynomial element() {
        const auto p = ring_->field().characteristic();
        Polynomial f(ring_);
        const auto terms = 1 + rng_() % 3;
        for (std::uint64_t t = 0; t < terms; ++t) {
            const auto& m = monomials_[rng_() % monomials_.size()];
            f += m.scaled(static_cast<PrimeField::Element>(1 + rng_() % (p - 1)));
        }
        return f;
    }

    std::vector<Polynomial> elements(std::size_t max_count) {
        std::vector<Polynomial> out;
        const auto count = 1 + rng_() % max_count;
        for (std::uint64_t g = 0; g < count; ++g) out.push_back(element());
        return out;
    }

   private:
    RingPtr ring_;
    std::vector<Polynomial> monomials_;
    std::mt19937_64 rng_;
};

/// Advances a nondecreasing index tuple; false once exhausted.
bool next_tuple(std::vector<std::size_t>& tuple, std::size_t range) {
    for (std::size_t k = tuple.size(); k-- > 0;) {
        if (tuple[k] + 1 < range) {
            ++tuple[k];
            for (std::size_t j = k + 1; j < tuple.size(); ++j) tuple[j] = tuple[k];
            return true;
        }
    }
    return false;
}

}  // namespace

std::string_view to_string(Verdict v) noexcept {
    return v == Verdict::violated ? "violated" : "holds_on_all_tested";
}

std::string_view to_string(Relation r) noexcept { return r == Relation::equal ? "equal" : "strict_less"; }

std::vector<FrobeniusExponent> default_exponents(const PrimeField& field) {
    std::vector<FrobeniusExponent> out{FrobeniusExponent(field, 1)};
    const std::uint64_t p = field.characteristic();
    if (p * p <= FrobeniusExponent::max_q) out.emplace_back(field, 2);
    return out;
}

ConditionReport check_ci_instance(const ConditionQuery& query) {
    const auto& R = query.ring;
    const RIdeal xs(R, reprs(query.xs));
    ConditionReport report;
    report.samples_tested = 1;
    const auto colon = r_colon(xs, query.y);
    for (const auto& q : query.qs) {
        std::vector<RElement> powers;
        for (const auto& x : query.xs) powers.push_back(x.frobenius(q));
        const auto lhs = r_bracket_power(colon, q);
        const auto rhs = r_colon(RIdeal(R, reprs(powers)), query.y.frobenius(q));
        if (auto w = separate(lhs, rhs)) {
            report.verdict = Verdict::violated;
            report.witness = Witness{false, reprs(query.xs), {query.y.repr()}, q.q(), lhs.canonical_generators(),
                                     rhs.canonical_generators(), *w};
            return report;
        }
    }
    return report;
}

ConditionReport check_ideal_pair(const RIdeal& I, const RIdeal& J, const std::vector<FrobeniusExponent>& qs) {
    ConditionReport report;
    report.samples_tested = 1;
    const auto colon = r_colon(I, J);
    for (const auto& q : qs) {
        const auto lhs = r_bracket_power(colon, q);
        const auto rhs = r_colon(r_bracket_power(I, q), r_bracket_power(J, q));
        if (auto w = separate(lhs, rhs)) {
            report.verdict = Verdict::violated;
            report.witness = Witness{true,
                                     {I.generators().begin(), I.generators().end()},
                                     {J.generators().begin(), J.generators().end()},
                                     q.q(),
                                     lhs.canonical_generators(),
                                     rhs.canonical_generators(),
                                     *w};
            return report;
        }
    }
    return report;
}

ConditionReport search_violation(const QuotientPtr& R, std::size_t i, std::uint32_t degree_bound,
                                 const std::vector<FrobeniusExponent>& qs, std::uint64_t sample_budget,
                                 std::uint64_t seed) {
    if (degree_bound < 1) throw Error(ErrorCode::InvalidArgument, "degree bound must be at least 1");
    const auto& S = R->ambient();
    std::uint64_t tested = 0;
    auto run = [&](std::vector<Polynomial> xs, const Polynomial& y) -> std::optional<ConditionReport> {
        std::vector<RElement> elements;
        for (auto& x : xs) elements.emplace_back(R, x);
        auto report = check_ci_instance({R, std::move(elements), RElement(R, y), qs});
        ++tested;
        if (report.verdict != Verdict::violated) return std::nullopt;
        report.samples_tested = tested;
        return report;
    };

    const auto monomials = monomials_up_to(S, 1, degree_bound);
    std::vector<std::size_t> tuple(i, 0);
    do {
        std::vector<Polynomial> xs;
        for (auto index : tuple) xs.push_back(monomials[index]);
        for (const auto& y : monomials) {
            if (tested >= sample_budget) return {Verdict::holds_on_all_tested, std::nullopt, tested};
            if (auto found = run(xs, y)) return *found;
        }
    } while (next_tuple(tuple, monomials.size()));

    Sampler sampler(S, degree_bound, seed);
    while (tested < sample_budget) {
        std::vector<Polynomial> xs;
        for (std::size_t k = 0; k < i; ++k) xs.push_back(sampler.element());
        auto y = sampler.element();
        if (auto found = run(std::move(xs), y)) return *found;
    }
    return {Verdict::holds_on_all_tested, std::nullopt, tested};
}

ConditionReport search_pair_violation(const QuotientPtr& R, std::uint32_t degree_bound,
                                      const std::vector<FrobeniusExponent>& qs, std::uint64_t sample_budget,
                                      std::uint64_t seed, std::size_t max_generators) {
    if (degree_bound < 1) throw Error(ErrorCode::InvalidArgument, "degree bound must be at least 1");
    if (max_generators < 1) throw Error(ErrorCode::InvalidArgument, "ideals need at least one generator");
    const auto& S = R->ambient();
    std::uint64_t tested = 0;
    auto run = [&](std::vector<Polynomial> a, std::vector<Polynomial> b) -> std::optional<ConditionReport> {
        auto report = check_ideal_pair(RIdeal(R, std::move(a)), RIdeal(R, std::move(b)), qs);
        ++tested;
        if (report.verdict != Verdict::violated) return std::nullopt;
        report.samples_tested = tested;
        return report;
    };

    const auto monomials = monomials_up_to(S, 1, degree_bound);
    for (const auto& a : monomials)
        for (const auto& b : monomials) {
            if (tested >= sample_budget) return {Verdict::holds_on_all_tested, std::nullopt, tested};
            if (auto found = run({a}, {b})) return *found;
        }

    Sampler sampler(S, degree_bound, seed);
    while (tested < sample_budget) {
        auto a = sampler.elements(max_generators);
        auto b = sampler.elements(max_generators);
        if (auto found = run(std::move(a), std::move(b))) return *found;
    }
    return {Verdict::holds_on_all_tested, std::nullopt, tested};
}

LengthFormulaReport check_length_formula(const RIdeal& I, const RIdeal& J, const std::vector<FrobeniusExponent>& qs) {
    for (const auto& g : I.generators())
        if (!J.contains(g)) throw Error(ErrorCode::ContainmentViolated, to_string(g) + " is not in " + to_string(J));
    if (!is_origin_primary(I)) throw Error(ErrorCode::NotPrimaryAtOrigin, to_string(I) + " is not primary to the origin");
    const auto m = RIdeal::maximal(I.ring());
    LengthFormulaReport report{length(I) - length(J), {}};
    for (const auto& q : qs) {
        const auto lhs = length(r_bracket_power(I, q));
        const auto rhs = report.colength_between * length(r_bracket_power(m, q)) + length(r_bracket_power(J, q));
        if (lhs > rhs)
            throw Error(ErrorCode::InternalError, "length inequality failed at q = " + std::to_string(q.q()));
        report.rows.push_back({q.q(), lhs, rhs, lhs == rhs ? Relation::equal : Relation::strict_less});
    }
    return report;
}

PrincipalityReport colon_principality(const RElement& x, const RElement& y) {
    if (!x.repr().is_homogeneous() || !y.repr().is_homogeneous())
        throw Error(ErrorCode::NonHomogeneousInput, "colon principality needs homogeneous elements");
    auto colon = r_colon(RIdeal(x.ring(), {x.repr()}), y);
    if (colon.is_zero()) return {std::move(colon), 0, std::nullopt};
    auto minimal = minimal_generators(colon);
    std::optional<Polynomial> generator;
    if (minimal.size() == 1) generator = minimal.front();
    const auto mu = minimal.size();
    return {std::move(colon), mu, std::move(generator)};
}

Diagnosis diagnose(const QuotientPtr& R, const DiagnoseConfig& config) {
    const auto qs = config.qs.empty() ? default_exponents(R->field()) : config.qs;
    return Diagnosis{
        kunz_regular_test(R, 1),
        hk_series(R, config.e_max),
        search_violation(R, 0, config.degree_bound, qs, config.sample_budget, config.seed),
        search_violation(R, 1, config.degree_bound, qs, config.sample_budget, config.seed),
        search_pair_violation(R, config.degree_bound, qs, config.pair_budget, config.seed),
    };
}

}  // namespace frobkit
