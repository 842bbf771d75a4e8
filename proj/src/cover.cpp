#include "zetaforge/cover.hpp"

#include <json.hpp>
#include <stdexcept>

namespace zetaforge {

std::vector<long> divisors_of(long n) {
    std::vector<long> out;
    for (long d = 1; d <= n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

namespace {
void validate(const CoverSpec& spec);
}

CoverSpec load_cover_spec(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("cover file: ") + e.what());
    }
    if (!doc.is_object()) throw std::invalid_argument("cover file: expected a JSON object");
    CoverSpec spec;
    for (const char* key : {"c_order", "group_order", "normalizer_order"})
        if (!doc.contains(key) || !doc[key].is_number_integer())
            throw std::invalid_argument(std::string("cover file: missing integer field '") + key + "'");
    spec.c_order = doc["c_order"].get<long>();
    spec.group_order = doc["group_order"].get<long>();
    spec.normalizer_order = doc["normalizer_order"].get<long>();
    if (!doc.contains("classes") || !doc["classes"].is_object())
        throw std::invalid_argument("cover file: missing object field 'classes'");
    for (const auto& [k, v] : doc["classes"].items()) {
        long d;
        try {
            d = std::stol(k);
        } catch (...) {
            throw std::invalid_argument("cover file: class key '" + k + "' is not a divisor");
        }
        if (!v.is_string())
            throw std::invalid_argument("cover file: class values must be expression strings");
        spec.classes[d] = K0Elem::parse(v.get<std::string>());
    }
    if (doc.contains("symbols")) {
        if (!doc["symbols"].is_object())
            throw std::invalid_argument("cover file: 'symbols' must be an object");
        for (const auto& [name, val] : doc["symbols"].items()) {
            CoverSpec::SymbolValues sv;
            if (val.contains("count")) {
                Rat r(val["count"].get<std::string>());
                r.canonicalize();
                sv.count = r;
            }
            if (val.contains("euler")) {
                Rat r(val["euler"].get<std::string>());
                r.canonicalize();
                sv.euler = r;
            }
            if (val.contains("hodge")) sv.hodge = UVPoly::parse(val["hodge"].get<std::string>());
            spec.symbols[name] = sv;
        }
    }
    validate(spec);
    return spec;
}

namespace {

void validate(const CoverSpec& spec) {
    if (spec.c_order < 1) throw std::invalid_argument("cover: |C| must be >= 1");
    if (spec.normalizer_order % spec.c_order != 0 || spec.group_order % spec.normalizer_order != 0)
        throw std::invalid_argument("cover: need |C| dividing |N_G(C)| dividing |G|");
    for (long d : divisors_of(spec.c_order))
        if (!spec.classes.count(d))
            throw std::invalid_argument("cover: missing class for divisor " + std::to_string(d));
}

} // namespace

ChiCResult chi_c_cover(const CoverSpec& spec) {
    validate(spec);
    ChiCResult res;
    for (long d : divisors_of(spec.c_order)) {
        K0Elem acc = spec.classes.at(d).scaled(Rat(d));
        for (long dp : divisors_of(d))
            if (dp < d) acc = acc - res.table.at(dp).scaled(Rat(dp));
        res.table[d] = acc.scaled(make_rat(1, d));
    }
    res.result = res.table.at(spec.c_order).scaled(make_rat(spec.c_order, spec.normalizer_order));
    return res;
}

EulerIntegralityReport euler_integrality_check(const CoverSpec& spec) {
    ChiCResult chi = chi_c_cover(spec);
    SpecializationMap eu = SpecializationMap::euler();
    for (const auto& [name, sv] : spec.symbols)
        if (sv.euler) eu.scalar_values[name] = *sv.euler;
    EulerIntegralityReport report;
    for (const auto& [d, elem] : chi.table)
        report.table[d] = std::get<Rat>(specialize(elem, eu));
    report.value = std::get<Rat>(specialize(chi.result, eu));
    report.zero_required = spec.c_order > 1;
    if (!is_integer(report.value))
        throw std::domain_error("euler_integrality_check: value " + report.value.get_str() +
                                " is not an integer; input classes are inconsistent");
    if (report.zero_required && report.value != 0)
        throw std::domain_error("euler_integrality_check: nontrivial decomposition group "
                                "requires a vanishing Euler value, got " + report.value.get_str());
    return report;
}

} // namespace zetaforge
