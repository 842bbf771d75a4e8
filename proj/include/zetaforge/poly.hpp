#pragma once

#include <vector>
#include <string>
#include "zetaforge/rat.hpp"

namespace zetaforge {

// Dense univariate polynomial over Q in the indeterminate T.
// Normal form: no trailing zero coefficients; the zero polynomial has an
// empty coefficient vector and degree -1.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    static QPoly constant(const Rat& c);
    static QPoly monomial(const Rat& c, std::size_t deg);

    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    Rat coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rat(0); }
    Rat leading() const;

    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator*(const QPoly& o) const;
    QPoly operator-() const;
    QPoly scaled(const Rat& c) const;
    bool operator==(const QPoly& o) const { return coeffs_ == o.coeffs_; }

    // Exact division with remainder; divisor must be nonzero.
    static void divmod(const QPoly& num, const QPoly& den, QPoly& quot, QPoly& rem);
    // Monic gcd; gcd(0, 0) = 0.
    static QPoly gcd(const QPoly& a, const QPoly& b);

    // Ascending-degree rendering, e.g. "1 - 3*T + 2*T^2".
    std::string to_string(const std::string& var = "T") const;

private:
    void trim();
    std::vector<Rat> coeffs_;
};

} // namespace zetaforge
