#ifndef FROBKIT_INVARIANTS_HPP
#define FROBKIT_INVARIANTS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "frobkit/quotient_ring.hpp"

namespace frobkit {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Krull dimension of S/I from the leading monomials of a reduced basis:
/// the largest variable set U with no leading monomial supported in U.
std::size_t krull_dim(const ReducedGB& basis);
std::size_t krull_dim(const RingPresentation& R);

/// True iff every variable is nilpotent modulo lift(I), i.e. the radical
/// of I is the graded maximal ideal. False for the unit ideal.
bool is_origin_primary(const RIdeal& I);

/// Number of standard monomials of a zero-dimensional reduced basis.
std::uint64_t standard_monomial_count(const ReducedGB& basis);

/// λ(R/I). Zero for the unit ideal; NotPrimaryAtOrigin unless I is
/// origin-primary.
std::uint64_t length(const RIdeal& I);

/// Subset of the user generators of I whose images form a basis of I/mI.
/// NonHomogeneousInput unless K and the generators are homogeneous.
std::vector<Polynomial> minimal_generators(const RIdeal& I);
std::size_t min_generators(const RIdeal& I);

/// Polynomial in n with rational coefficients, lowest degree first.
struct FittedPolynomial {
    std::vector<Rational> coefficients;

    std::size_t degree() const { return coefficients.empty() ? 0 : coefficients.size() - 1; }
    Rational operator()(std::int64_t n) const;
};

struct GeneratorGrowthReport {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> mu_values;  // (n, μ(I^n))
    std::optional<FittedPolynomial> fitted;
    std::optional<std::pair<std::uint64_t, std::uint64_t>> fit_window;  // inclusive
    std::optional<std::uint64_t> spread_estimate;                       // deg(H) + 1
};

/// Lowest-degree polynomial matching a stable tail of `values` (indexed
/// from `first_n`), extended backwards as far as it keeps matching. Empty
/// when no tail of length ≥ degree + 2 fits.
std::optional<std::pair<FittedPolynomial, std::uint64_t>> fit_tail(const std::vector<std::int64_t>& values,
                                                                    std::uint64_t first_n);

/// μ(I^n) for n = 1..n_max (n_max ≥ 4) with the fitted growth polynomial.
GeneratorGrowthReport mu_series(const RIdeal& I, std::uint64_t n_max);

struct HKRow {
    unsigned e;
    std::uint64_t q;
    std::uint64_t lambda;
    Rational ratio;  // λ / q^d
};

struct HKSeries {
    std::size_t d;
    std::vector<HKRow> rows;
    Rational e_hk_estimate;
    bool regular_flag;
};

/// λ(R/m^[q]) for q = p, p², ..., p^e_max.
HKSeries hk_series(const QuotientPtr& R, unsigned e_max);

/// λ(R/m^[p^e]) == p^(e·d).
bool kunz_regular_test(const QuotientPtr& R, unsigned e);

}  // namespace frobkit

#endif
