#pragma once

#include <memory>
#include <vector>
#include <string>
#include "zetaforge/rat.hpp"

namespace zetaforge {

// Description of F_{p^m} as Z/p[x] modulo a monic irreducible of degree m.
// The modulus is chosen deterministically by field_make, so element indices
// and cached counts are reproducible across runs and machines.
struct FieldDesc {
    long p = 0;
    long m = 0;
    std::vector<long> modulus; // length m+1, monic, coeffs in [0, p)

    Int q() const { return int_pow(Int(p), static_cast<unsigned long>(m)); }
    bool operator==(const FieldDesc& o) const {
        return p == o.p && m == o.m && modulus == o.modulus;
    }
};

using FieldPtr = std::shared_ptr<const FieldDesc>;

bool is_prime(long n);

// Trial division by every monic polynomial of degree 1..deg/2 over Z/p.
bool is_irreducible_mod_p(const std::vector<long>& poly, long p);

// The lexicographically smallest monic irreducible of degree m over Z/p,
// comparing coefficients low degree first.
FieldPtr field_make(long p, long m);

// Element of F_{p^m} in the polynomial basis, coeffs[i] mod p on x^i.
class FqElem {
public:
    FqElem(FieldPtr field, std::vector<long> coeffs);
    static FqElem zero(const FieldPtr& field);
    static FqElem one(const FieldPtr& field);
    static FqElem from_int(const FieldPtr& field, const Int& n);
    // Index in [0, q): sum of coeffs[i] * p^i. Enumeration order of the field.
    static FqElem from_index(const FieldPtr& field, unsigned long idx);
    unsigned long index() const;

    const FieldPtr& field() const { return field_; }
    const std::vector<long>& coeffs() const { return coeffs_; }
    bool is_zero() const;

    FqElem operator+(const FqElem& o) const;
    FqElem operator-(const FqElem& o) const;
    FqElem operator*(const FqElem& o) const;
    FqElem operator-() const;
    FqElem pow(const Int& e) const;
    FqElem inverse() const;
    bool operator==(const FqElem& o) const;
    bool operator!=(const FqElem& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    void require_same_field(const FqElem& o) const;
    FieldPtr field_;
    std::vector<long> coeffs_;
};

} // namespace zetaforge
