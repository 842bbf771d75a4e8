#pragma once

#include <string>
#include <vector>
#include "zetaforge/fq.hpp"
#include "zetaforge/rat.hpp"
#include "zetaforge/zmod.hpp"

namespace zetaforge {

// Multivariate polynomial with integer coefficients in variables x0..x{n-1}.
// Terms are kept in canonical form: graded-lex descending order, no zero
// coefficients, no duplicate exponent vectors.
class MultiPoly {
public:
    struct Term {
        Int coeff;
        std::vector<unsigned> exps;
    };

    explicit MultiPoly(std::size_t nvars) : nvars_(nvars) {}
    MultiPoly(std::size_t nvars, std::vector<Term> terms);

    static MultiPoly constant(std::size_t nvars, const Int& c);
    static MultiPoly variable(std::size_t nvars, std::size_t index);

    // Parses the polynomial expression syntax of variety files: integer
    // literals, x0..x{n-1}, +, -, *, ^ with explicit exponents, parentheses.
    static MultiPoly parse(const std::string& text, std::size_t nvars);

    std::size_t nvars() const { return nvars_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    long total_degree() const; // -1 for the zero polynomial
    bool is_homogeneous() const;

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly pow(unsigned e) const;
    MultiPoly derivative(std::size_t var) const;
    bool operator==(const MultiPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

    // Canonical rendering; parse(to_string()) reproduces the polynomial.
    std::string to_string() const;

private:
    void normalize(std::vector<Term> raw);
    std::size_t nvars_;
    std::vector<Term> terms_;
};

inline bool operator==(const MultiPoly::Term& a, const MultiPoly::Term& b) {
    return a.coeff == b.coeff && a.exps == b.exps;
}

// Exact evaluation with coefficients reduced into the point's ring.
FqElem eval_poly(const MultiPoly& f, const std::vector<FqElem>& point);
ZmodElem eval_poly(const MultiPoly& f, const std::vector<ZmodElem>& point);

} // namespace zetaforge
