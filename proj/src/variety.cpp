#include "zetaforge/variety.hpp"

#include <json.hpp>
#include <stdexcept>

namespace zetaforge {

VarietyPresentation parse_variety(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("variety file: ") + e.what());
    }
    if (!doc.is_object()) throw std::invalid_argument("variety file: expected a JSON object");

    VarietyPresentation v;
    if (!doc.contains("name") || !doc["name"].is_string())
        throw std::invalid_argument("variety file: missing string field 'name'");
    v.name = doc["name"].get<std::string>();

    if (!doc.contains("ambient") || !doc["ambient"].is_object())
        throw std::invalid_argument("variety file: missing object field 'ambient'");
    const auto& amb = doc["ambient"];
    if (!amb.contains("type") || !amb.contains("dim") || !amb["dim"].is_number_integer())
        throw std::invalid_argument("variety file: ambient needs 'type' and integer 'dim'");
    std::string type = amb["type"].get<std::string>();
    if (type == "affine") v.ambient.type = Ambient::Type::Affine;
    else if (type == "projective") v.ambient.type = Ambient::Type::Projective;
    else throw std::invalid_argument("variety file: ambient type must be 'affine' or 'projective'");
    v.ambient.dim = amb["dim"].get<long>();
    if (v.ambient.dim < 1)
        throw std::invalid_argument("variety file: ambient dim must be >= 1");

    if (!doc.contains("polys") || !doc["polys"].is_array())
        throw std::invalid_argument("variety file: missing array field 'polys'");
    std::size_t nvars = v.ambient.coords();
    for (const auto& ps : doc["polys"]) {
        if (!ps.is_string())
            throw std::invalid_argument("variety file: polys entries must be strings");
        MultiPoly f = MultiPoly::parse(ps.get<std::string>(), nvars);
        if (f.is_zero()) continue; // vacuous equation
        if (v.ambient.type == Ambient::Type::Projective) {
            if (!f.is_homogeneous())
                throw std::invalid_argument("variety file: nonhomogeneous polynomial '" +
                                            ps.get<std::string>() + "' under projective ambient");
            if (f.total_degree() == 0)
                throw std::invalid_argument("variety file: constant equation '" +
                                            ps.get<std::string>() + "' under projective ambient");
        }
        v.polys.push_back(std::move(f));
    }

    if (doc.contains("smooth")) {
        if (!doc["smooth"].is_boolean())
            throw std::invalid_argument("variety file: 'smooth' must be boolean");
        v.declared_smooth = doc["smooth"].get<bool>();
    }
    return v;
}

std::string serialize_variety(const VarietyPresentation& v) {
    nlohmann::ordered_json doc;
    doc["name"] = v.name;
    doc["ambient"] = {
        {"type", v.ambient.type == Ambient::Type::Projective ? "projective" : "affine"},
        {"dim", v.ambient.dim},
    };
    auto polys = nlohmann::ordered_json::array();
    for (const auto& f : v.polys) polys.push_back(f.to_string());
    doc["polys"] = polys;
    if (v.declared_smooth) doc["smooth"] = *v.declared_smooth;
    return doc.dump();
}

std::string variety_hash(const VarietyPresentation& v) {
    std::string s = serialize_variety(v);
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

long jacobian_rank_at(const VarietyPresentation& v, const std::vector<ZmodElem>& point) {
    std::size_t nvars = v.ambient.coords();
    if (point.size() != nvars)
        throw std::invalid_argument("jacobian_rank_at: point arity mismatch");
    if (v.polys.empty()) return 0;
    long p = point.front().p();
    for (const auto& x : point)
        if (x.p() != p || x.k() != 1)
            throw std::invalid_argument("jacobian_rank_at: point must live in Z/p");
    for (const auto& f : v.polys)
        if (!eval_poly(f, point).is_zero())
            throw std::invalid_argument("jacobian_rank_at: point is not a solution mod p");

    // Jacobian matrix over Z/p, then Gaussian elimination.
    std::size_t rows = v.polys.size();
    std::vector<std::vector<long>> mat(rows, std::vector<long>(nvars, 0));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < nvars; ++j) {
            Int val = eval_poly(v.polys[i].derivative(j), point).value();
            mat[i][j] = static_cast<long>(val.get_si());
        }

    long rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < nvars && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && mat[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(mat[row], mat[pivot]);
        // scale pivot row to 1
        long inv = 1;
        for (long t = 1; t < p; ++t)
            if (t * mat[row][col] % p == 1) { inv = t; break; }
        for (std::size_t j = col; j < nvars; ++j) mat[row][j] = mat[row][j] * inv % p;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row || mat[i][col] == 0) continue;
            long c = mat[i][col];
            for (std::size_t j = col; j < nvars; ++j)
                mat[i][j] = ((mat[i][j] - c * mat[row][j]) % p + p) % p;
        }
        ++row;
        ++rank;
    }
    return rank;
}

} // namespace zetaforge
