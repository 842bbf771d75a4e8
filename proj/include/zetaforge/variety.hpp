#pragma once

#include <optional>
#include <string>
#include <vector>
#include "zetaforge/multipoly.hpp"
#include "zetaforge/zmod.hpp"

namespace zetaforge {

struct Ambient {
    enum class Type { Affine, Projective };
    Type type = Type::Affine;
    long dim = 1;

    // number of coordinates: m for affine m-space, m+1 for projective m-space
    std::size_t coords() const {
        return static_cast<std::size_t>(type == Type::Projective ? dim + 1 : dim);
    }
    bool operator==(const Ambient& o) const { return type == o.type && dim == o.dim; }
};

// A polynomially presented variety over Z. The zero polynomial is dropped in
// canonical form; an empty system presents the full ambient space.
struct VarietyPresentation {
    std::string name;
    Ambient ambient;
    std::vector<MultiPoly> polys;
    std::optional<bool> declared_smooth;
};

// Parse / validate a variety-definition JSON document. Rejects syntax errors,
// nonhomogeneous (or constant) polynomials under a projective ambient, and
// out-of-range variables.
VarietyPresentation parse_variety(const std::string& json_text);

// Bit-exact canonical serialization: fixed key order, polynomials rendered
// with terms in graded-lex order.
std::string serialize_variety(const VarietyPresentation& v);

// FNV-1a over the canonical serialization, as 16 hex digits. Content address
// of the presentation for the count cache.
std::string variety_hash(const VarietyPresentation& v);

// Rank over Z/p of the Jacobian of the defining system at a mod-p solution.
long jacobian_rank_at(const VarietyPresentation& v, const std::vector<ZmodElem>& point);

} // namespace zetaforge
