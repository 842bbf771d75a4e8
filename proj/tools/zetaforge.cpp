// Command-line surface: exact point counts, the three generating series with
// rationality reports, symmetric-product checks for curves, and evaluation of
// Galois-cover classes with their specializations.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "zetaforge/cache.hpp"
#include "zetaforge/counting.hpp"
#include "zetaforge/cover.hpp"
#include "zetaforge/genseries.hpp"
#include "zetaforge/k0.hpp"
#include "zetaforge/rationality.hpp"

using namespace zetaforge;
using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 2; // NotFound / Mismatch / violated equation
constexpr int kExitResource = 3; // budget exceeded or unstable stabilization
constexpr int kExitInput = 4;

struct RunConfig {
    int workers = 1;
    long long budget = 100000000;
    long weil_order = 8;
    long igusa_order = 10;
    long stab_window = 2;
    std::string cache_dir;
    std::string output = "text";

    CountOptions count_options() const {
        CountOptions opts;
        opts.workers = workers;
        opts.budget = Int(static_cast<unsigned long>(budget));
        return opts;
    }
};

void add_common(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--workers", cfg.workers, "parallel enumeration workers")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--budget", cfg.budget, "max ring tuples visited per count")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--cache-dir", cfg.cache_dir, "count cache directory");
    cmd->add_option("--output", cfg.output, "output format")
        ->check(CLI::IsMember({"text", "json"}));
}

std::string resolve_cache_dir(const RunConfig& cfg) {
    const char* env = std::getenv("ZETAFORGE_CACHE");
    if (env && *env) return env; // environment wins over the flag
    return cfg.cache_dir;
}

VarietyPresentation load_variety(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open variety file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_variety(buf.str());
}

std::pair<long, long> factor_prime_power(long q) {
    if (q < 2) throw std::invalid_argument("q must be >= 2");
    long p = q;
    for (long d = 2; d * d <= q; ++d)
        if (q % d == 0) { p = d; break; }
    long m = 0;
    long rest = q;
    while (rest % p == 0) { rest /= p; ++m; }
    if (rest != 1) throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
    return {p, m};
}

// integer-cleared coefficient lists of a RatFn, shared scaling
std::pair<std::vector<Int>, std::vector<Int>> cleared_coeffs(const RatFn& f) {
    Int lcm(1);
    for (const auto& c : f.numer().coeffs())
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
    for (const auto& c : f.denom().coeffs())
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
    auto clear = [&](const QPoly& p) {
        std::vector<Int> out;
        for (const auto& c : p.coeffs()) {
            Rat s = c * Rat(lcm);
            out.push_back(s.get_num());
        }
        return out;
    };
    return {clear(f.numer()), clear(f.denom())};
}

ordered_json ratfn_json(const std::optional<RecurrenceResult>& rec) {
    ordered_json j;
    j["found"] = rec.has_value();
    if (rec) {
        auto [num, den] = cleared_coeffs(rec->ratfn);
        ordered_json jn = ordered_json::array(), jd = ordered_json::array();
        for (const auto& c : num) jn.push_back(c.get_str());
        for (const auto& c : den) jd.push_back(c.get_str());
        j["numer"] = jn;
        j["denom"] = jd;
        j["order"] = std::to_string(rec->recurrence_order);
        j["guard"] = std::to_string(rec->guard);
    }
    return j;
}

ordered_json shape_json(const std::optional<DenominatorShape>& shape) {
    ordered_json j;
    j["found"] = shape.has_value();
    if (shape) {
        ordered_json pairs = ordered_json::array();
        for (const auto& [a, b] : shape->pairs)
            pairs.push_back({{"a", std::to_string(a)}, {"b", std::to_string(b)}});
        j["pairs"] = pairs;
    }
    return j;
}

ordered_json series_json(const TruncSeries& s) {
    ordered_json arr = ordered_json::array();
    for (std::size_t n = 0; n < s.coeffs().size(); ++n)
        arr.push_back({{"n", std::to_string(n)},
                       {"num", s.coeff(n).get_num().get_str()},
                       {"den", s.coeff(n).get_den().get_str()}});
    return arr;
}

std::string shape_text(const DenominatorShape& shape) {
    std::string out;
    for (const auto& [a, b] : shape.pairs) {
        if (!out.empty()) out += " ";
        out += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    }
    return out.empty() ? "(empty product)" : out;
}

// ---------------------------------------------------------------------------
// count

int cmd_count(const std::string& variety_path, const std::string& kind, long p, long m, long n,
              const RunConfig& cfg) {
    VarietyPresentation v = load_variety(variety_path);
    CountCache cache(resolve_cache_dir(cfg));
    CountCache* cp = cache.enabled() ? &cache : nullptr;
    CountOptions opts = cfg.count_options();

    std::string hash = variety_hash(v);
    Int value;
    CountSequence::Meta meta;
    bool has_meta = false;
    if (kind == "weil") {
        if (n < 1) throw std::invalid_argument("weil counts start at n = 1");
        auto hit = cp ? cp->lookup(hash, CountKind::Weil, p, m, n) : std::nullopt;
        if (hit) {
            value = hit->value;
        } else {
            value = count_Fq(v, field_make(p, m * n), opts);
            if (cp) cp->store(hash, CountKind::Weil, p, m, n, value);
        }
    } else if (kind == "igusa") {
        auto hit = cp ? cp->lookup(hash, CountKind::Igusa, p, 1, n) : std::nullopt;
        if (hit) {
            value = hit->value;
        } else {
            value = count_padic(v, p, n, opts);
            if (cp) cp->store(hash, CountKind::Igusa, p, 1, n, value);
        }
    } else {
        has_meta = true;
        auto hit = cp ? cp->lookup(hash, CountKind::Serre, p, 1, n, cfg.stab_window) : std::nullopt;
        if (hit) {
            value = hit->value;
            meta = hit->meta;
        } else {
            LiftableCount lc = count_liftable(v, p, n, cfg.stab_window, opts);
            value = lc.value;
            meta.m_reached = lc.m_reached;
            meta.window = lc.window;
            meta.smooth = lc.smooth_shortcut;
            if (cp) {
                cp->store(hash, CountKind::Serre, p, 1, n, value, meta, cfg.stab_window);
                cp->store(hash, CountKind::Igusa, p, 1, n, lc.igusa_value);
            }
        }
    }

    if (cfg.output == "json") {
        ordered_json j;
        j["command"] = "count";
        j["kind"] = kind;
        j["variety"] = v.name;
        j["hash"] = hash;
        j["p"] = std::to_string(p);
        if (kind == "weil") j["m"] = std::to_string(m);
        j["n"] = std::to_string(n);
        j["value"] = value.get_str();
        if (has_meta)
            j["meta"] = {{"m_reached", std::to_string(meta.m_reached)},
                         {"window", std::to_string(meta.window)},
                         {"smooth", meta.smooth}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << value.get_str() << "\n";
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// zeta / igusa / serre

int report_series(const std::string& command, const VarietyPresentation& v, long p, long m,
                  long q_for_shape, const TruncSeries& series, const RunConfig& cfg) {
    long order = static_cast<long>(series.order());
    long max_order = (order + 1 - 3) / 2;
    std::optional<RecurrenceResult> rec;
    if (max_order >= 0) rec = find_recurrence(series.coeffs(), max_order, 3);

    std::optional<DenominatorShape> shape;
    if (rec) {
        long bound = 2 * static_cast<long>(v.ambient.coords());
        shape = denominator_shape(rec->ratfn, q_for_shape, -bound, bound, order);
    }

    if (cfg.output == "json") {
        ordered_json j;
        j["command"] = command;
        j["variety"] = v.name;
        j["hash"] = variety_hash(v);
        j["p"] = std::to_string(p);
        if (command == "zeta") {
            j["m"] = std::to_string(m);
            j["q"] = int_pow(Int(p), static_cast<unsigned long>(m)).get_str();
        }
        j["order"] = std::to_string(order);
        j["series"] = series_json(series);
        j["ratfn"] = ratfn_json(rec);
        j["shape"] = shape_json(shape);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << series.to_tsv();
        if (rec) {
            std::cout << "ratfn: " << rec->ratfn.to_string() << "\n";
            std::cout << "order: " << rec->recurrence_order << "\n";
            std::cout << "guard: " << rec->guard << "\n";
            std::cout << "shape: " << (shape ? shape_text(*shape) : "not found") << "\n";
        } else {
            std::cout << "ratfn: not found\n";
        }
    }
    return rec && shape ? kExitOk : kExitNegative;
}

int cmd_zeta(const std::string& variety_path, long p, long m, long order, const RunConfig& cfg) {
    VarietyPresentation v = load_variety(variety_path);
    CountCache cache(resolve_cache_dir(cfg));
    CountCache* cp = cache.enabled() ? &cache : nullptr;
    CountSequence seq = weil_counts(v, p, m, order, cfg.count_options(), cp);
    TruncSeries z = hasse_weil(seq, order);
    Int q = int_pow(Int(p), static_cast<unsigned long>(m));
    return report_series("zeta", v, p, m, q.get_si(), z, cfg);
}

int cmd_igusa(const std::string& variety_path, long p, long order, const RunConfig& cfg) {
    VarietyPresentation v = load_variety(variety_path);
    CountCache cache(resolve_cache_dir(cfg));
    CountCache* cp = cache.enabled() ? &cache : nullptr;
    CountSequence seq = igusa_counts(v, p, order, cfg.count_options(), cp);
    return report_series("igusa", v, p, 1, p, igusa_series(seq, order), cfg);
}

int cmd_serre(const std::string& variety_path, long p, long order, const RunConfig& cfg) {
    VarietyPresentation v = load_variety(variety_path);
    CountCache cache(resolve_cache_dir(cfg));
    CountCache* cp = cache.enabled() ? &cache : nullptr;
    CountSequence seq = serre_counts(v, p, order, cfg.stab_window, cfg.count_options(), cp);
    return report_series("serre", v, p, 1, p, serre_series(seq, order), cfg);
}

// ---------------------------------------------------------------------------
// kapranov

int cmd_kapranov(const std::string& variety_path, long q, long order, const RunConfig& cfg) {
    VarietyPresentation v = load_variety(variety_path);
    auto [p, m] = factor_prime_power(q);
    CountCache cache(resolve_cache_dir(cfg));
    CountCache* cp = cache.enabled() ? &cache : nullptr;
    CountSequence seq = weil_counts(v, p, m, order, cfg.count_options(), cp);
    std::vector<Int> b = sym_product_counts(seq, order);
    std::vector<Rat> coeffs;
    for (const auto& c : b) coeffs.emplace_back(c);

    // generic detection when the series is long enough, otherwise the
    // curve-structured fit with the denominator imposed
    std::optional<RecurrenceResult> rec;
    long max_order = (order + 1 - 3) / 2;
    if (max_order >= 0) rec = find_recurrence(coeffs, max_order, 3);
    if (!rec) rec = fit_curve_zeta(coeffs, q, 1);

    std::optional<CurveShapeResult> curve;
    std::optional<FunctionalEquationResult> feq;
    if (rec) {
        curve = curve_shape_check(rec->ratfn, q);
        if (curve->ok()) feq = functional_equation_check(rec->ratfn, q, *curve->genus);
    }

    if (cfg.output == "json") {
        ordered_json j;
        j["command"] = "kapranov";
        j["variety"] = v.name;
        j["hash"] = variety_hash(v);
        j["q"] = std::to_string(q);
        j["order"] = std::to_string(order);
        ordered_json counts = ordered_json::array();
        for (const auto& c : b) counts.push_back(c.get_str());
        j["sym_counts"] = counts;
        j["ratfn"] = ratfn_json(rec);
        ordered_json jc;
        if (curve) {
            jc["ok"] = curve->ok();
            if (curve->ok()) jc["genus"] = std::to_string(*curve->genus);
            else jc["mismatch"] = curve->mismatch;
        } else {
            jc["ok"] = false;
            jc["mismatch"] = "no rational function detected";
        }
        j["curve"] = jc;
        ordered_json jf;
        jf["checked"] = feq.has_value();
        if (feq) {
            jf["holds"] = feq->holds;
            if (!feq->holds) {
                auto [rn, rd] = cleared_coeffs(feq->residual);
                ordered_json num = ordered_json::array(), den = ordered_json::array();
                for (const auto& c : rn) num.push_back(c.get_str());
                for (const auto& c : rd) den.push_back(c.get_str());
                jf["residual"] = {{"numer", num}, {"denom", den}};
            }
        }
        j["functional_equation"] = jf;
        std::cout << j.dump(2) << "\n";
    } else {
        for (std::size_t n = 0; n < b.size(); ++n)
            std::cout << n << "\t" << b[n].get_str() << "\n";
        if (!rec) {
            std::cout << "ratfn: not found\n";
        } else {
            std::cout << "ratfn: " << rec->ratfn.to_string() << "\n";
            std::cout << "guard: " << rec->guard << "\n";
            if (curve->ok()) {
                std::cout << "curve: genus " << *curve->genus << "\n";
                std::cout << "functional_equation: " << (feq->holds ? "holds" : "violated") << "\n";
                if (!feq->holds)
                    std::cout << "residual: " << feq->residual.to_string() << "\n";
            } else {
                std::cout << "curve: mismatch (" << curve->mismatch << ")\n";
            }
        }
    }
    bool ok = rec && curve && curve->ok() && feq && feq->holds;
    return ok ? kExitOk : kExitNegative;
}

// ---------------------------------------------------------------------------
// groth

int cmd_groth(const std::string& cover_path, const std::string& element_expr,
              const std::vector<std::string>& spec_flags, const RunConfig& cfg) {
    std::optional<CoverSpec> spec;
    K0Elem result;
    std::map<long, K0Elem> table;
    if (!cover_path.empty()) {
        std::ifstream in(cover_path);
        if (!in) throw std::invalid_argument("cannot open cover file: " + cover_path);
        std::stringstream buf;
        buf << in.rdbuf();
        spec = load_cover_spec(buf.str());
        ChiCResult chi = chi_c_cover(*spec);
        result = chi.result;
        table = chi.table;
    } else {
        result = K0Elem::parse(element_expr);
    }

    struct SpecOut {
        std::string label;
        std::string value;
    };
    std::vector<SpecOut> outputs;
    for (const std::string& flag : spec_flags) {
        SpecializationMap map = SpecializationMap::euler();
        if (flag == "euler") {
            if (spec)
                for (const auto& [name, sv] : spec->symbols)
                    if (sv.euler) map.scalar_values[name] = *sv.euler;
        } else if (flag == "hodge") {
            map = SpecializationMap::hodge();
            if (spec)
                for (const auto& [name, sv] : spec->symbols)
                    if (sv.hodge) map.hodge_values[name] = *sv.hodge;
        } else if (flag.rfind("count:", 0) == 0) {
            long q = std::stol(flag.substr(6));
            map = SpecializationMap::counting(q);
            if (spec)
                for (const auto& [name, sv] : spec->symbols)
                    if (sv.count) map.scalar_values[name] = *sv.count;
        } else {
            throw std::invalid_argument("unknown --spec value: " + flag);
        }
        outputs.push_back({flag, spec_value_to_string(specialize(result, map))});
    }

    if (cfg.output == "json") {
        ordered_json j;
        j["command"] = "groth";
        if (spec) {
            j["c_order"] = std::to_string(spec->c_order);
            j["group_order"] = std::to_string(spec->group_order);
            j["normalizer_order"] = std::to_string(spec->normalizer_order);
            ordered_json jt;
            for (const auto& [d, e] : table) jt[std::to_string(d)] = e.to_string();
            j["table"] = jt;
        }
        j["result"] = result.to_string();
        ordered_json js = ordered_json::array();
        for (const auto& s : outputs) js.push_back({{"spec", s.label}, {"value", s.value}});
        j["specializations"] = js;
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& [d, e] : table)
            std::cout << "chi_c[" << d << "] = " << e.to_string() << "\n";
        std::cout << "result = " << result.to_string() << "\n";
        for (const auto& s : outputs) std::cout << s.label << " = " << s.value << "\n";
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic generating series from point counts"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string variety_path, kind = "weil", cover_path, element_expr;
    long p = 2, m = 1, n = 1, q = 2;
    long order = -1;
    std::vector<std::string> spec_flags;

    CLI::App* c_count = app.add_subcommand("count", "one exact point count");
    c_count->add_option("--variety", variety_path, "variety file")->required();
    c_count->add_option("--kind", kind, "weil | igusa | serre")
        ->check(CLI::IsMember({"weil", "igusa", "serre"}));
    c_count->add_option("--p", p, "prime")->required();
    c_count->add_option("--m", m, "base extension degree (weil)");
    c_count->add_option("--n", n, "index of the count")->required();
    c_count->add_option("--stab-window", cfg.stab_window, "serre stabilization window");
    add_common(c_count, cfg);

    CLI::App* c_zeta = app.add_subcommand("zeta", "Hasse-Weil series and rationality report");
    c_zeta->add_option("--variety", variety_path)->required();
    c_zeta->add_option("--p", p)->required();
    c_zeta->add_option("--m", m);
    c_zeta->add_option("--order", order);
    add_common(c_zeta, cfg);

    CLI::App* c_igusa = app.add_subcommand("igusa", "level-count series and rationality report");
    c_igusa->add_option("--variety", variety_path)->required();
    c_igusa->add_option("--p", p)->required();
    c_igusa->add_option("--order", order);
    add_common(c_igusa, cfg);

    CLI::App* c_serre = app.add_subcommand("serre", "liftable-count series and rationality report");
    c_serre->add_option("--variety", variety_path)->required();
    c_serre->add_option("--p", p)->required();
    c_serre->add_option("--order", order);
    c_serre->add_option("--stab-window", cfg.stab_window);
    add_common(c_serre, cfg);

    CLI::App* c_kap = app.add_subcommand("kapranov", "symmetric-product counts and curve checks");
    c_kap->add_option("--variety", variety_path)->required();
    c_kap->add_option("--q", q, "field size, a prime power")->required();
    c_kap->add_option("--order", order);
    add_common(c_kap, cfg);

    CLI::App* c_groth = app.add_subcommand("groth", "Galois-cover classes and specializations");
    CLI::Option* opt_cover = c_groth->add_option("--cover", cover_path, "cover file");
    c_groth->add_option("--element", element_expr, "class expression")->excludes(opt_cover);
    c_groth->add_option("--spec", spec_flags, "count:<q> | euler | hodge");
    add_common(c_groth, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (*c_count) return cmd_count(variety_path, kind, p, m, n, cfg);
        if (*c_zeta) return cmd_zeta(variety_path, p, m, order < 0 ? cfg.weil_order : order, cfg);
        if (*c_igusa) return cmd_igusa(variety_path, p, order < 0 ? cfg.igusa_order : order, cfg);
        if (*c_serre) return cmd_serre(variety_path, p, order < 0 ? cfg.igusa_order : order, cfg);
        if (*c_kap) return cmd_kapranov(variety_path, q, order < 0 ? cfg.weil_order : order, cfg);
        if (*c_groth) {
            if (cover_path.empty() && element_expr.empty())
                throw std::invalid_argument("groth needs --cover or --element");
            return cmd_groth(cover_path, element_expr, spec_flags, cfg);
        }
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const UnstableCount& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return kExitInput;
}
