#include "zetaforge/rationality.hpp"

#include <functional>
#include <stdexcept>

namespace zetaforge {

namespace {

// Solve the overdetermined system rows * x = rhs over Q; returns a solution
// with free variables set to 0, or nullopt when inconsistent.
std::optional<std::vector<Rat>> solve_exact(std::vector<std::vector<Rat>> rows,
                                            std::vector<Rat> rhs, std::size_t unknowns) {
    std::size_t nrows = rows.size();
    std::vector<long> pivot_col(nrows, -1);
    std::size_t row = 0;
    for (std::size_t col = 0; col < unknowns && row < nrows; ++col) {
        std::size_t pr = row;
        while (pr < nrows && rows[pr][col] == 0) ++pr;
        if (pr == nrows) continue;
        std::swap(rows[row], rows[pr]);
        std::swap(rhs[row], rhs[pr]);
        Rat inv = Rat(1) / rows[row][col];
        for (std::size_t j = col; j < unknowns; ++j) rows[row][j] *= inv;
        rhs[row] *= inv;
        for (std::size_t i = 0; i < nrows; ++i) {
            if (i == row || rows[i][col] == 0) continue;
            Rat c = rows[i][col];
            for (std::size_t j = col; j < unknowns; ++j) rows[i][j] -= c * rows[row][j];
            rhs[i] -= c * rhs[row];
        }
        pivot_col[row] = static_cast<long>(col);
        ++row;
    }
    for (std::size_t i = row; i < nrows; ++i)
        if (rhs[i] != 0) return std::nullopt; // inconsistent
    std::vector<Rat> x(unknowns, Rat(0));
    for (std::size_t i = 0; i < row; ++i) x[static_cast<std::size_t>(pivot_col[i])] = rhs[i];
    return x;
}

RecurrenceResult build_result(const std::vector<Rat>& coeffs, const std::vector<Rat>& q,
                              long order, long length) {
    std::vector<Rat> den(static_cast<std::size_t>(order) + 1, Rat(0));
    den[0] = 1;
    for (long j = 1; j <= order; ++j) den[static_cast<std::size_t>(j)] = q[static_cast<std::size_t>(j - 1)];
    QPoly denom{std::vector<Rat>(den)};
    // numerator = (denom * series) truncated below the recurrence window
    std::vector<Rat> num(static_cast<std::size_t>(order), Rat(0));
    for (long n = 0; n < order; ++n) {
        Rat acc(0);
        for (long j = 0; j <= n && j <= order; ++j)
            acc += den[static_cast<std::size_t>(j)] * coeffs[static_cast<std::size_t>(n - j)];
        num[static_cast<std::size_t>(n)] = acc;
    }
    RecurrenceResult r;
    r.ratfn = RatFn(QPoly(std::move(num)), denom);
    r.recurrence_order = r.ratfn.denom().degree();
    r.guard = length - 2 * order;
    // soundness: the expansion must reproduce every input coefficient
    TruncSeries check = r.ratfn.expand(static_cast<std::size_t>(length - 1));
    for (long i = 0; i < length; ++i)
        if (check.coeff(static_cast<std::size_t>(i)) != coeffs[static_cast<std::size_t>(i)])
            throw std::logic_error("find_recurrence: detected function fails to reproduce input");
    return r;
}

} // namespace

std::optional<RecurrenceResult> find_recurrence(const std::vector<Rat>& coeffs,
                                                long max_order, long min_guard) {
    long length = static_cast<long>(coeffs.size());
    if (max_order < 0 || min_guard < 0)
        throw std::invalid_argument("find_recurrence: negative parameter");
    if (length < 2 * max_order + min_guard)
        throw std::invalid_argument("find_recurrence: need at least 2*max_order + min_guard "
                                    "coefficients");
    for (long order = 0; order <= max_order; ++order) {
        if (length - 2 * order < min_guard) break;
        if (order == 0) {
            bool all_zero = true;
            for (const Rat& c : coeffs)
                if (c != 0) { all_zero = false; break; }
            if (all_zero) {
                RecurrenceResult r;
                r.ratfn = RatFn();
                r.recurrence_order = 0;
                r.guard = length;
                return r;
            }
            continue;
        }
        // rows n = order..length-1:  sum_j q_j c_{n-j} = -c_n
        std::vector<std::vector<Rat>> rows;
        std::vector<Rat> rhs;
        for (long n = order; n < length; ++n) {
            std::vector<Rat> row(static_cast<std::size_t>(order));
            for (long j = 1; j <= order; ++j)
                row[static_cast<std::size_t>(j - 1)] = coeffs[static_cast<std::size_t>(n - j)];
            rows.push_back(std::move(row));
            rhs.push_back(-coeffs[static_cast<std::size_t>(n)]);
        }
        auto sol = solve_exact(std::move(rows), std::move(rhs), static_cast<std::size_t>(order));
        if (sol) return build_result(coeffs, *sol, order, length);
    }
    return std::nullopt;
}

std::optional<DenominatorShape> denominator_shape(const RatFn& f, long q, long a_lo, long a_hi,
                                                  long b_max) {
    if (q < 2) throw std::invalid_argument("denominator_shape: q must be >= 2");
    if (a_lo > a_hi || b_max < 1)
        throw std::invalid_argument("denominator_shape: empty search range");
    // candidate factors in lexicographic (b, a) order
    struct Candidate {
        long a, b;
        QPoly poly;
    };
    std::vector<Candidate> candidates;
    for (long b = 1; b <= b_max; ++b)
        for (long a = a_lo; a <= a_hi; ++a) {
            QPoly g = QPoly::constant(Rat(1)) - QPoly::monomial(rat_pow(Rat(q), a),
                                                                static_cast<std::size_t>(b));
            candidates.push_back(Candidate{a, b, std::move(g)});
        }

    std::vector<std::pair<long, long>> chosen;
    std::function<bool(const QPoly&, std::size_t)> descend =
        [&](const QPoly& rem, std::size_t start) -> bool {
        if (rem.degree() == 0) return rem.coeff(0) == 1;
        for (std::size_t i = start; i < candidates.size(); ++i) {
            const Candidate& c = candidates[i];
            if (c.poly.degree() > rem.degree()) continue;
            QPoly quot, r;
            QPoly::divmod(rem, c.poly, quot, r);
            if (!r.is_zero()) continue;
            chosen.emplace_back(c.a, c.b);
            if (descend(quot, i)) return true; // same index: multiplicities allowed
            chosen.pop_back();
        }
        return false;
    };
    if (!descend(f.denom(), 0)) return std::nullopt;
    DenominatorShape shape;
    shape.pairs = chosen;
    return shape;
}

CurveShapeResult curve_shape_check(const RatFn& f, long q) {
    CurveShapeResult res;
    QPoly expected = QPoly(std::vector<Rat>{Rat(1), Rat(-1)}) *
                     QPoly(std::vector<Rat>{Rat(1), Rat(-q)});
    if (!(f.denom() == expected)) {
        res.mismatch = "denominator is " + f.denom().to_string() + ", not (1 - T)(1 - " +
                       std::to_string(q) + "*T)";
        return res;
    }
    long deg = f.numer().degree();
    if (deg < 0) {
        res.mismatch = "zero numerator";
        return res;
    }
    if (deg % 2 != 0) {
        res.mismatch = "numerator degree " + std::to_string(deg) + " is odd";
        return res;
    }
    res.genus = deg / 2;
    return res;
}

FunctionalEquationResult functional_equation_check(const RatFn& f, long q, long genus) {
    FunctionalEquationResult res;
    res.residual = ratfn_substitute_inverse(f, q, genus);
    res.holds = res.residual.is_zero();
    return res;
}

std::optional<RecurrenceResult> fit_curve_zeta(const std::vector<Rat>& coeffs, long q,
                                               long min_guard) {
    long length = static_cast<long>(coeffs.size());
    if (min_guard < 1) throw std::invalid_argument("fit_curve_zeta: min_guard must be >= 1");
    if (length < 2) return std::nullopt;
    QPoly denom = QPoly(std::vector<Rat>{Rat(1), Rat(-1)}) *
                  QPoly(std::vector<Rat>{Rat(1), Rat(-q)});
    // numerator = series * denominator, which must terminate early enough to
    // leave min_guard vanishing tail coefficients as evidence
    std::vector<Rat> prod(static_cast<std::size_t>(length), Rat(0));
    for (long n = 0; n < length; ++n) {
        Rat acc(0);
        for (long j = 0; j <= 2 && j <= n; ++j)
            acc += denom.coeff(static_cast<std::size_t>(j)) * coeffs[static_cast<std::size_t>(n - j)];
        prod[static_cast<std::size_t>(n)] = acc;
    }
    long deg = -1;
    for (long n = 0; n < length; ++n)
        if (prod[static_cast<std::size_t>(n)] != 0) deg = n;
    long guard = length - 1 - deg;
    if (deg < 0 || guard < min_guard) return std::nullopt;
    prod.resize(static_cast<std::size_t>(deg) + 1);
    RecurrenceResult r;
    r.ratfn = RatFn(QPoly(std::move(prod)), denom);
    r.recurrence_order = r.ratfn.denom().degree();
    r.guard = guard;
    TruncSeries check = r.ratfn.expand(static_cast<std::size_t>(length - 1));
    for (long i = 0; i < length; ++i)
        if (check.coeff(static_cast<std::size_t>(i)) != coeffs[static_cast<std::size_t>(i)])
            throw std::logic_error("fit_curve_zeta: fitted function fails to reproduce input");
    return r;
}

} // namespace zetaforge
