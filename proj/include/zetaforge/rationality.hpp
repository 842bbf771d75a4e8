#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>
#include "zetaforge/ratfn.hpp"

namespace zetaforge {

struct RecurrenceResult {
    RatFn ratfn;
    long recurrence_order = 0; // degree of the canonical denominator
    long guard = 0;            // surplus coefficients beyond a square fit
};

// Minimal linear recurrence with constant rational coefficients satisfied by
// the whole input, found by exact Gaussian elimination on the Hankel-style
// system, converted to a rational function with denom(0) = 1. The guard is
// the number of coefficients beyond the 2l needed to pin down an order-l fit;
// a result is only reported when guard >= min_guard. NotFound (empty) is a
// legitimate outcome, not an error.
std::optional<RecurrenceResult> find_recurrence(const std::vector<Rat>& coeffs,
                                                long max_order, long min_guard);

struct DenominatorShape {
    // (a, b) pairs with product (1 - q^a T^b) equal to the denominator,
    // ordered by (b, a)
    std::vector<std::pair<long, long>> pairs;
};

// Factor denom(f) as a product of (1 - q^a T^b) within the given ranges, by
// recursive divide-and-match in lexicographic (b, a) candidate order.
// Multiplicities allowed; first complete factorization wins.
std::optional<DenominatorShape> denominator_shape(const RatFn& f, long q, long a_lo, long a_hi,
                                                  long b_max);

struct CurveShapeResult {
    std::optional<long> genus;
    std::string mismatch; // set when genus is absent
    bool ok() const { return genus.has_value(); }
};

// Checks the curve-zeta normal form: denominator exactly (1-T)(1-qT) and an
// even-degree numerator; genus is half the numerator degree.
CurveShapeResult curve_shape_check(const RatFn& f, long q);

struct FunctionalEquationResult {
    bool holds = false;
    RatFn residual;
};

FunctionalEquationResult functional_equation_check(const RatFn& f, long q, long genus);

// Curve-structured detection used when a series is too short for the generic
// detector: the denominator (1-T)(1-qT) is imposed and the numerator read off
// by truncation. Succeeds only if the numerator tail vanishes, i.e. at least
// min_guard trailing coefficients of numer are predicted by the quotient.
std::optional<RecurrenceResult> fit_curve_zeta(const std::vector<Rat>& coeffs, long q,
                                               long min_guard);

} // namespace zetaforge
