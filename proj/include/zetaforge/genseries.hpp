#pragma once

#include <vector>
#include "zetaforge/counting.hpp"
#include "zetaforge/series.hpp"

namespace zetaforge {

// Z(T) = exp(sum_{n>=1} N_n T^n / n) truncated at `order`. Coefficients are
// asserted to be nonnegative integers; anything else means corrupted counts.
TruncSeries hasse_weil(const CountSequence& counts, long order);

// Q(T) = sum Ntilde_n T^n, assembled directly from the level counts.
TruncSeries igusa_series(const CountSequence& counts, long order);

// P(T) = sum Nbar_n T^n from liftable counts; refuses sequences whose entries
// did not stabilize.
TruncSeries serre_series(const CountSequence& counts, long order);

// M_d for d = 1..D with N_n = sum_{d|n} d*M_d, by induction on n. Negative or
// fractional M_d signal corrupted counts.
struct ClosedPointTable {
    std::vector<Int> m; // m[d-1] = number of closed points of degree d
};
ClosedPointTable closed_points(const CountSequence& counts, long depth);

// b_n = [T^n] prod_d (1 - T^d)^{-M_d}, the degree-n effective-cycle counts.
// Cross-checked coefficientwise against the exp route before returning.
std::vector<Int> sym_product_counts(const CountSequence& counts, long order);

} // namespace zetaforge
