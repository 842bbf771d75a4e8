#pragma once

#include <map>
#include <optional>
#include <string>
#include "zetaforge/k0.hpp"

namespace zetaforge {

// Data of an unramified Galois cover Y -> X with a cyclic decomposition
// group C: |C|, |N_G(C)|, |G|, and the class [Y/A_d] for the unique subgroup
// A_d of each order d dividing |C|. Optional per-symbol values feed the
// specialization maps.
struct CoverSpec {
    long c_order = 1;
    long group_order = 1;
    long normalizer_order = 1;
    std::map<long, K0Elem> classes; // divisor d -> [Y/A_d]

    struct SymbolValues {
        std::optional<Rat> count;
        std::optional<Rat> euler;
        std::optional<UVPoly> hodge;
    };
    std::map<std::string, SymbolValues> symbols;
};

// JSON cover file: {"c_order": int, "group_order": int, "normalizer_order":
// int, "classes": {"<divisor>": "<K0 expression>"}, "symbols": {...}?}.
CoverSpec load_cover_spec(const std::string& json_text);

std::vector<long> divisors_of(long n);

struct ChiCResult {
    std::map<long, K0Elem> table; // d -> chi_c of the order-d stage
    K0Elem result;                // chi_c for the decomposition group C itself
};

// Solves the triangular system d*[Y/A_d] = sum_{d'|d} d' * table[d'] by
// induction on divisors, then applies the |C|/|N_G(C)| normalization.
ChiCResult chi_c_cover(const CoverSpec& spec);

struct EulerIntegralityReport {
    Rat value;                  // Euler specialization of the result
    std::map<long, Rat> table;  // Euler values of the per-divisor table
    bool zero_required = false; // |C| > 1 forces a vanishing Euler value
};

// Asserts that the Euler specialization of the result is an integer, and zero
// whenever |C| > 1. A violation throws: it means the input classes are not
// the classes of any actual cover.
EulerIntegralityReport euler_integrality_check(const CoverSpec& spec);

} // namespace zetaforge
