#include "zetaforge/genseries.hpp"

#include <stdexcept>

namespace zetaforge {

namespace {

void require_kind(const CountSequence& counts, CountKind kind, const char* who) {
    if (counts.kind != kind)
        throw std::invalid_argument(std::string(who) + ": wrong count sequence kind");
}

void require_length(const CountSequence& counts, long upto, const char* who) {
    if (static_cast<long>(counts.values.size()) < upto)
        throw std::invalid_argument(std::string(who) + ": insufficient counts for requested order");
}

} // namespace

TruncSeries hasse_weil(const CountSequence& counts, long order) {
    require_kind(counts, CountKind::Weil, "hasse_weil");
    if (order < 1) throw std::invalid_argument("hasse_weil: order must be >= 1");
    require_length(counts, order, "hasse_weil");
    TruncSeries s = TruncSeries::zero(static_cast<std::size_t>(order));
    for (long n = 1; n <= order; ++n)
        s.set_coeff(static_cast<std::size_t>(n),
                    make_rat(counts.values[static_cast<std::size_t>(n - 1)], Int(n)));
    TruncSeries z = s.exp();
    for (const Rat& c : z.coeffs())
        if (!is_integer(c) || c < 0)
            throw std::logic_error("hasse_weil: coefficient is not a nonnegative integer");
    return z;
}

TruncSeries igusa_series(const CountSequence& counts, long order) {
    require_kind(counts, CountKind::Igusa, "igusa_series");
    if (order < 0) throw std::invalid_argument("igusa_series: order must be >= 0");
    require_length(counts, order + 1, "igusa_series");
    TruncSeries s = TruncSeries::zero(static_cast<std::size_t>(order));
    for (long n = 0; n <= order; ++n)
        s.set_coeff(static_cast<std::size_t>(n), Rat(counts.values[static_cast<std::size_t>(n)]));
    return s;
}

TruncSeries serre_series(const CountSequence& counts, long order) {
    require_kind(counts, CountKind::Serre, "serre_series");
    if (order < 0) throw std::invalid_argument("serre_series: order must be >= 0");
    require_length(counts, order + 1, "serre_series");
    if (counts.meta.size() != counts.values.size())
        throw std::invalid_argument("serre_series: sequence lacks stabilization metadata");
    TruncSeries s = TruncSeries::zero(static_cast<std::size_t>(order));
    for (long n = 0; n <= order; ++n)
        s.set_coeff(static_cast<std::size_t>(n), Rat(counts.values[static_cast<std::size_t>(n)]));
    return s;
}

ClosedPointTable closed_points(const CountSequence& counts, long depth) {
    require_kind(counts, CountKind::Weil, "closed_points");
    if (depth < 1) throw std::invalid_argument("closed_points: depth must be >= 1");
    require_length(counts, depth, "closed_points");
    ClosedPointTable table;
    table.m.resize(static_cast<std::size_t>(depth));
    for (long n = 1; n <= depth; ++n) {
        Int acc = counts.values[static_cast<std::size_t>(n - 1)];
        for (long d = 1; d < n; ++d)
            if (n % d == 0) acc -= Int(d) * table.m[static_cast<std::size_t>(d - 1)];
        if (acc % n != 0 || acc < 0)
            throw std::domain_error("closed_points: counts are not consistent with any "
                                    "closed-point decomposition at degree " + std::to_string(n));
        table.m[static_cast<std::size_t>(n - 1)] = acc / n;
    }
    return table;
}

std::vector<Int> sym_product_counts(const CountSequence& counts, long order) {
    require_kind(counts, CountKind::Weil, "sym_product_counts");
    if (order < 1) throw std::invalid_argument("sym_product_counts: order must be >= 1");
    require_length(counts, order, "sym_product_counts");
    ClosedPointTable table = closed_points(counts, order);

    // Euler product over closed points: (1 - T^d)^{-M_d} contributes binomial
    // coefficients C(M_d + k - 1, k) at T^{dk}.
    TruncSeries acc = TruncSeries::one(static_cast<std::size_t>(order));
    for (long d = 1; d <= order; ++d) {
        const Int& mult = table.m[static_cast<std::size_t>(d - 1)];
        if (mult == 0) continue;
        TruncSeries factor = TruncSeries::zero(static_cast<std::size_t>(order));
        Int binom(1);
        for (long k = 0; d * k <= order; ++k) {
            if (k > 0) binom = binom * (mult + k - 1) / k; // exact at every step
            factor.set_coeff(static_cast<std::size_t>(d * k), Rat(binom));
        }
        acc = acc.mul(factor);
    }

    // the exp route must agree coefficient by coefficient
    TruncSeries viaExp = hasse_weil(counts, order);
    if (!(acc == viaExp))
        throw std::logic_error("sym_product_counts: Euler product disagrees with exp route");

    std::vector<Int> out;
    out.reserve(static_cast<std::size_t>(order) + 1);
    for (const Rat& c : acc.coeffs()) {
        if (!is_integer(c) || c < 0)
            throw std::logic_error("sym_product_counts: coefficient is not a nonnegative integer");
        out.push_back(c.get_num());
    }
    return out;
}

} // namespace zetaforge
