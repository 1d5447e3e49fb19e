#include "frobkit/invariants.hpp"

#include <algorithm>
#include <bit>

#include "frobkit/error.hpp"
#include "frobkit/ideal_ops.hpp"

namespace frobkit {

namespace {

using Exponents = std::vector<Monomial::Exponent>;

std::vector<Exponents> leading_exponents(const ReducedGB& basis) {
    std::vector<Exponents> out;
    for (const auto& g : basis.basis()) {
        auto e = g.leading_monomial().exponents();
        out.emplace_back(e.begin(), e.end());
    }
    return out;
}

bool divisible_by_any(const Exponents& e, const std::vector<Exponents>& leads) {
    for (const auto& lead : leads) {
        bool divides = true;
        for (std::size_t i = 0; i < e.size() && divides; ++i) divides = lead[i] <= e[i];
        if (divides) return true;
    }
    return false;
}

std::uint64_t count_below(std::size_t i, Exponents& e, const std::vector<Exponents>& leads) {
    if (i == e.size()) return 1;
    std::uint64_t total = 0;
    for (e[i] = 0; !divisible_by_any(e, leads); ++e[i]) total += count_below(i + 1, e, leads);
    e[i] = 0;
    return total;
}

bool is_pure_power_of(const Polynomial& g, std::size_t i) {
    if (g.size() != 1) return false;
    const auto e = g.leading_monomial().exponents();
    for (std::size_t j = 0; j < e.size(); ++j)
        if ((j == i) != (e[j] != 0)) return false;
    return true;
}

/// Row echelon set of polynomials with pairwise distinct leading monomials.
class PivotSet {
   public:
    bool insert(Polynomial f) {
        while (!f.is_zero()) {
            auto it = std::find_if(pivots_.begin(), pivots_.end(), [&](const Polynomial& p) {
                return p.leading_monomial() == f.leading_monomial();
            });
            if (it == pivots_.end()) break;
            f.subtract_multiple(f.leading_coeff(), Monomial(f.ring()->arity()), *it);
        }
        if (f.is_zero()) return false;
        pivots_.push_back(f.monic());
        return true;
    }

   private:
    std::vector<Polynomial> pivots_;
};

void require_homogeneous(const RIdeal& I) {
    for (const auto& k : I.ring()->defining_basis().basis())
        if (!k.is_homogeneous())
            throw Error(ErrorCode::NonHomogeneousInput, "defining ideal is not homogeneous: " + to_string(k));
    for (const auto& g : I.generators())
        if (!g.is_homogeneous()) throw Error(ErrorCode::NonHomogeneousInput, "generator is not homogeneous: " + to_string(g));
}

BigInt big_pow(std::uint64_t base, std::size_t exponent) {
    BigInt out = 1;
    for (std::size_t i = 0; i < exponent; ++i) out *= base;
    return out;
}

/// Coefficients of the degree-(xs.size()-1) interpolant, lowest first.
std::vector<Rational> interpolate(const std::vector<std::int64_t>& xs, const std::vector<std::int64_t>& ys) {
    const std::size_t n = xs.size();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
    for (std::size_t r = 0; r < n; ++r) {
        Rational power = 1;
        for (std::size_t c = 0; c < n; ++c, power *= xs[r]) a[r][c] = power;
        a[r][n] = ys[r];
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (a[pivot][c] == 0) ++pivot;
        std::swap(a[pivot], a[c]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0) continue;
            const Rational factor = a[r][c] / a[c][c];
            for (std::size_t k = c; k <= n; ++k) a[r][k] -= factor * a[c][k];
        }
    }
    std::vector<Rational> out(n);
    for (std::size_t r = 0; r < n; ++r) out[r] = a[r][n] / a[r][r];
    while (out.size() > 1 && out.back() == 0) out.pop_back();
    return out;
}

}  // namespace

std::size_t krull_dim(const ReducedGB& basis) {
    const std::size_t n = basis.ring()->arity();
    if (basis.is_unit_ideal()) throw Error(ErrorCode::InvalidArgument, "the unit ideal has no dimension");
    if (n > 30) throw Error(ErrorCode::InvalidArgument, "too many variables for subset search");
    std::vector<std::uint32_t> supports;
    for (const auto& g : basis.basis()) {
        std::uint32_t mask = 0;
        const auto e = g.leading_monomial().exponents();
        for (std::size_t i = 0; i < n; ++i)
            if (e[i] != 0) mask |= 1u << i;
        supports.push_back(mask);
    }
    std::size_t best = 0;
    for (std::uint32_t subset = 0; subset < (1u << n); ++subset) {
        const auto size = static_cast<std::size_t>(std::popcount(subset));
        if (size <= best) continue;
        bool independent = std::none_of(supports.begin(), supports.end(),
                                        [&](std::uint32_t s) { return (s & ~subset) == 0; });
        if (independent) best = size;
    }
    return best;
}

std::size_t krull_dim(const RingPresentation& R) { return krull_dim(R.defining_basis()); }

bool is_origin_primary(const RIdeal& I) {
    if (I.is_unit()) return false;
    const auto& lift = I.lift();
    const auto basis = lift.groebner().basis();
    for (std::size_t i = 0; i < I.ring()->arity(); ++i) {
        bool nilpotent = std::any_of(basis.begin(), basis.end(), [&](const Polynomial& g) { return is_pure_power_of(g, i); });
        if (!nilpotent && !radical_member(Polynomial::variable(lift.ring(), i), lift)) return false;
    }
    return true;
}

std::uint64_t standard_monomial_count(const ReducedGB& basis) {
    if (basis.is_unit_ideal()) return 0;
    const auto leads = leading_exponents(basis);
    const std::size_t n = basis.ring()->arity();
    for (std::size_t i = 0; i < n; ++i) {
        bool bounded = std::any_of(leads.begin(), leads.end(), [&](const Exponents& e) {
            for (std::size_t j = 0; j < n; ++j)
                if ((j == i) != (e[j] != 0)) return false;
            return true;
        });
        if (!bounded) throw Error(ErrorCode::InvalidArgument, "quotient is not finite dimensional");
    }
    Exponents e(n, 0);
    return count_below(0, e, leads);
}

std::uint64_t length(const RIdeal& I) {
    if (I.is_unit()) return 0;
    if (!is_origin_primary(I)) throw Error(ErrorCode::NotPrimaryAtOrigin, to_string(I) + " is not primary to the origin");
    return standard_monomial_count(I.lift().groebner());
}

std::vector<Polynomial> minimal_generators(const RIdeal& I) {
    require_homogeneous(I);
    const auto& R = I.ring();
    const auto& S = R->ambient();
    std::vector<Polynomial> shifted;
    for (const auto& g : I.generators())
        for (std::size_t j = 0; j < S->arity(); ++j) shifted.push_back(Polynomial::variable(S, j) * g);
    for (const auto& k : R->defining_basis().basis()) shifted.push_back(k);
    Ideal mI(S, std::move(shifted));
    const auto& basis = mI.groebner();

    PivotSet pivots;
    std::vector<Polynomial> out;
    for (const auto& g : I.generators())
        if (pivots.insert(normal_form(g, basis))) out.push_back(g);
    return out;
}

std::size_t min_generators(const RIdeal& I) { return minimal_generators(I).size(); }

Rational FittedPolynomial::operator()(std::int64_t n) const {
    Rational out = 0;
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) out = out * n + *it;
    return out;
}

std::optional<std::pair<FittedPolynomial, std::uint64_t>> fit_tail(const std::vector<std::int64_t>& values,
                                                                    std::uint64_t first_n) {
    const std::size_t len = values.size();
    for (std::size_t degree = 0; degree + 2 <= len; ++degree) {
        std::vector<std::int64_t> xs, ys;
        for (std::size_t k = len - degree - 1; k < len; ++k) {
            xs.push_back(static_cast<std::int64_t>(first_n + k));
            ys.push_back(values[k]);
        }
        FittedPolynomial H{interpolate(xs, ys)};
        std::size_t start = len - degree - 1;
        while (start > 0 && H(static_cast<std::int64_t>(first_n + start - 1)) == values[start - 1]) --start;
        if (len - start >= degree + 2 && H.degree() == degree) return std::make_pair(std::move(H), first_n + start);
    }
    return std::nullopt;
}

GeneratorGrowthReport mu_series(const RIdeal& I, std::uint64_t n_max) {
    if (n_max < 4) throw Error(ErrorCode::InvalidArgument, "mu_series needs n_max >= 4");
    if (I.generators().empty()) throw Error(ErrorCode::InvalidArgument, "mu_series of the zero ideal");
    GeneratorGrowthReport report;
    const auto base = minimal_generators(I);
    auto current = base;
    std::vector<std::int64_t> values;
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        if (n > 1) {
            std::vector<Polynomial> products;
            for (const auto& f : current)
                for (const auto& g : base) products.push_back(f * g);
            current = minimal_generators(RIdeal(I.ring(), std::move(products)));
        }
        report.mu_values.emplace_back(n, current.size());
        values.push_back(static_cast<std::int64_t>(current.size()));
    }
    if (auto fit = fit_tail(values, 1)) {
        report.spread_estimate = fit->first.degree() + 1;
        report.fit_window = std::make_pair(fit->second, n_max);
        report.fitted = std::move(fit->first);
    }
    return report;
}

HKSeries hk_series(const QuotientPtr& R, unsigned e_max) {
    if (e_max < 1) throw Error(ErrorCode::InvalidArgument, "hk_series needs e_max >= 1");
    HKSeries series{krull_dim(*R), {}, 0, true};
    const auto m = RIdeal::maximal(R);
    for (unsigned e = 1; e <= e_max; ++e) {
        FrobeniusExponent q(R->field(), e);
        const auto lambda = length(r_bracket_power(m, q));
        const BigInt qd = big_pow(q.q(), series.d);
        series.rows.push_back({e, q.q(), lambda, Rational(BigInt(lambda), qd)});
        if (BigInt(lambda) != qd) series.regular_flag = false;
    }
    series.e_hk_estimate = series.rows.back().ratio;
    return series;
}

bool kunz_regular_test(const QuotientPtr& R, unsigned e) {
    if (e < 1) throw Error(ErrorCode::InvalidArgument, "kunz test needs e >= 1");
    FrobeniusExponent q(R->field(), e);
    const auto lambda = length(r_bracket_power(RIdeal::maximal(R), q));
    return BigInt(lambda) == big_pow(q.q(), krull_dim(*R));
}

}  // namespace frobkit
