#pragma once

#include <string>
#include <vector>
#include "zetaforge/poly.hpp"
#include "zetaforge/series.hpp"

namespace zetaforge {

// Rational function in T over Q, kept in canonical form:
// gcd(numer, denom) = 1 and denom(0) = 1. Series with a pole at T = 0 are
// rejected; none of the generating series handled here has one.
class RatFn {
public:
    RatFn() : numer_(), denom_(QPoly::constant(Rat(1))) {}
    RatFn(const QPoly& numer, const QPoly& denom);

    const QPoly& numer() const { return numer_; }
    const QPoly& denom() const { return denom_; }
    bool is_zero() const { return numer_.is_zero(); }

    RatFn operator+(const RatFn& o) const { return RatFn(numer_ * o.denom_ + o.numer_ * denom_, denom_ * o.denom_); }
    RatFn operator-(const RatFn& o) const { return RatFn(numer_ * o.denom_ - o.numer_ * denom_, denom_ * o.denom_); }
    RatFn operator*(const RatFn& o) const { return RatFn(numer_ * o.numer_, denom_ * o.denom_); }
    bool operator==(const RatFn& o) const { return numer_ == o.numer_ && denom_ == o.denom_; }

    // Power-series expansion of the function to the given truncation order.
    TruncSeries expand(std::size_t order) const;

    // Printed with numerator and denominator cleared to integer coefficients.
    std::string to_string() const;

private:
    QPoly numer_;
    QPoly denom_;
};

// The functional-equation residual q^{1-g} T^{2-2g} f(T) - f(1/(qT)), cleared
// to a single canonical rational function. A zero result means f satisfies
// the genus-g functional equation over F_q.
RatFn ratfn_substitute_inverse(const RatFn& f, long q, long genus);

} // namespace zetaforge
