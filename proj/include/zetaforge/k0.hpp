#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>
#include "zetaforge/rat.hpp"

namespace zetaforge {

// Laurent polynomial in u, v over Q; value space of the Hodge specialization
// (negative exponents arise from inverted L).
class UVPoly {
public:
    UVPoly() = default;
    static UVPoly constant(const Rat& c);
    static UVPoly monomial(const Rat& c, long du, long dv);
    static UVPoly parse(const std::string& text);

    const std::map<std::pair<long, long>, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    UVPoly operator+(const UVPoly& o) const;
    UVPoly operator-(const UVPoly& o) const;
    UVPoly operator*(const UVPoly& o) const;
    UVPoly scaled(const Rat& c) const;
    bool operator==(const UVPoly& o) const { return terms_ == o.terms_; }

    std::string to_string() const;

private:
    void prune();
    std::map<std::pair<long, long>, Rat> terms_;
};

// Element of K0(Var) ⊗ Q localized at L: a finite rational combination of
// monomials L^a * (multiset of formal symbols), a in Z. Formal symbols stand
// for classes that do not reduce to L-polynomials; nothing here attempts to
// decide equality of the underlying varieties.
class K0Elem {
public:
    struct Key {
        long l_exp = 0;
        std::vector<std::string> symbols; // sorted multiset
        bool operator<(const Key& o) const {
            if (symbols != o.symbols) return symbols < o.symbols;
            return l_exp < o.l_exp;
        }
        bool operator==(const Key& o) const {
            return l_exp == o.l_exp && symbols == o.symbols;
        }
    };

    K0Elem() = default;
    static K0Elem zero() { return K0Elem(); }
    static K0Elem one() { return from_rat(Rat(1)); }
    static K0Elem from_rat(const Rat& c);
    static K0Elem lefschetz(long exp = 1); // L^exp
    static K0Elem symbol(const std::string& name);

    // Grammar: L, integers, rational scalars, 'quoted' or "quoted" symbols,
    // +, -, *, ^, division by constants, parentheses.
    static K0Elem parse(const std::string& text);

    const std::map<Key, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    // the coefficient when the element is a pure rational multiple of 1
    std::optional<Rat> as_rat() const;
    std::vector<std::string> symbol_names() const;

    K0Elem operator+(const K0Elem& o) const;
    K0Elem operator-(const K0Elem& o) const;
    K0Elem operator*(const K0Elem& o) const;
    K0Elem operator-() const;
    K0Elem scaled(const Rat& c) const;
    // negative exponents require an invertible monomial c * L^a
    K0Elem pow(long e) const;
    bool operator==(const K0Elem& o) const { return terms_ == o.terms_; }

    std::string to_string() const;

private:
    void prune();
    std::map<Key, Rat> terms_;
};

struct SpecializationMap {
    enum class Kind { Counting, Euler, Hodge };
    Kind kind = Kind::Euler;
    long q = 0;                                // counting: L -> q
    std::map<std::string, Rat> scalar_values;  // counting/euler symbol values
    std::map<std::string, UVPoly> hodge_values;

    static SpecializationMap counting(long q) {
        SpecializationMap s;
        s.kind = Kind::Counting;
        s.q = q;
        return s;
    }
    static SpecializationMap euler() {
        SpecializationMap s;
        s.kind = Kind::Euler;
        return s;
    }
    static SpecializationMap hodge() {
        SpecializationMap s;
        s.kind = Kind::Hodge;
        return s;
    }
};

using SpecValue = std::variant<Rat, UVPoly>;

// Ring-homomorphic image: counting sends L to q, Euler sends L to 1, Hodge
// sends L to uv. Every symbol must carry a value; unassigned symbols are an
// error, since equality in the source ring is not decidable here.
SpecValue specialize(const K0Elem& e, const SpecializationMap& s);

std::string spec_value_to_string(const SpecValue& v);

} // namespace zetaforge
