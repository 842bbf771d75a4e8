#pragma once

#include <vector>
#include <string>
#include "zetaforge/rat.hpp"

namespace zetaforge {

// Power series truncated at a fixed order N: coefficients for T^0 .. T^N are
// all stored explicitly. Binary operations insist on matching orders so that
// no coefficient is ever silently trusted beyond its truncation.
class TruncSeries {
public:
    TruncSeries() : coeffs_(1, Rat(0)) {}
    explicit TruncSeries(std::vector<Rat> coeffs);
    static TruncSeries zero(std::size_t order);
    static TruncSeries one(std::size_t order);

    std::size_t order() const { return coeffs_.size() - 1; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    const Rat& coeff(std::size_t i) const { return coeffs_.at(i); }
    void set_coeff(std::size_t i, const Rat& v) { coeffs_.at(i) = v; }

    TruncSeries add(const TruncSeries& o) const;
    TruncSeries sub(const TruncSeries& o) const;
    TruncSeries mul(const TruncSeries& o) const;
    // Multiplicative inverse; requires a nonzero constant term.
    TruncSeries invert() const;
    // exp of a series with zero constant term, via E' = s'E.
    TruncSeries exp() const;
    // log of a series with constant term 1; inverse of exp.
    TruncSeries log() const;

    bool operator==(const TruncSeries& o) const { return coeffs_ == o.coeffs_; }

    // One line per coefficient: "n<TAB>num/den".
    std::string to_tsv() const;

private:
    void require_same_order(const TruncSeries& o) const;
    std::vector<Rat> coeffs_;
};

} // namespace zetaforge
