#include "zetaforge/counting.hpp"

#include <algorithm>
#include <cstdint>
#include <memory>
#include <thread>
#include <unordered_set>
#include "zetaforge/cache.hpp"

namespace zetaforge {

std::vector<ChunkRange> split_range(const Int& total, int chunks) {
    if (chunks < 1) throw std::invalid_argument("split_range: need at least one chunk");
    std::vector<ChunkRange> out;
    Int base = total / chunks;
    Int rem = total % chunks;
    Int lo(0);
    for (int i = 0; i < chunks; ++i) {
        Int size = base + (Int(i) < rem ? 1 : 0);
        out.push_back(ChunkRange{lo, lo + size});
        lo += size;
    }
    return out;
}

namespace {

void check_options(const CountOptions& opts) {
    if (opts.workers < 1) throw std::invalid_argument("CountOptions: workers must be >= 1");
    if (opts.budget < 1) throw std::invalid_argument("CountOptions: budget must be >= 1");
}

// ---------------------------------------------------------------------------
// fast index arithmetic for F_q, q = p^m
//
// Elements are their enumeration indices (base-p digit vectors). For fields
// up to 2^16 elements, multiplication goes through exp/log tables w.r.t. a
// fixed generator and addition is digitwise; larger fields fall back to
// polynomial-basis arithmetic on FqElem.

constexpr unsigned long kTableLimit = 1ul << 16;

class FqEngine {
public:
    explicit FqEngine(FieldPtr field) : field_(std::move(field)) {
        p_ = static_cast<unsigned long>(field_->p);
        m_ = static_cast<unsigned long>(field_->m);
        Int qz = field_->q();
        q_ = qz.get_ui();
        ppow_.resize(m_ + 1);
        ppow_[0] = 1;
        for (unsigned long i = 1; i <= m_; ++i) ppow_[i] = ppow_[i - 1] * p_;
        build_tables();
    }

    const FieldPtr& field() const { return field_; }
    unsigned long q() const { return q_; }

    unsigned long add(unsigned long a, unsigned long b) const {
        if (p_ == 2) return a ^ b;
        unsigned long r = 0;
        for (unsigned long i = 0; i < m_; ++i) {
            unsigned long d = digs_[a * m_ + i] + digs_[b * m_ + i];
            if (d >= p_) d -= p_;
            r += d * ppow_[i];
        }
        return r;
    }

    unsigned long mul(unsigned long a, unsigned long b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }

    // x^e for e >= 0
    unsigned long pow(unsigned long x, unsigned long e) const {
        if (e == 0) return 1;
        if (x == 0) return 0;
        return exp_[(log_[x] * e) % (q_ - 1)];
    }

private:
    void build_tables() {
        if (q_ > kTableLimit)
            throw std::logic_error("FqEngine: field too large for tables");
        digs_.resize(q_ * m_);
        for (unsigned long a = 0; a < q_; ++a) {
            unsigned long t = a;
            for (unsigned long i = 0; i < m_; ++i) {
                digs_[a * m_ + i] = static_cast<std::uint16_t>(t % p_);
                t /= p_;
            }
        }
        // factor q-1 and pick the first generator of the unit group
        std::vector<unsigned long> primes;
        unsigned long n = q_ - 1;
        for (unsigned long d = 2; d * d <= n; ++d)
            if (n % d == 0) {
                primes.push_back(d);
                while (n % d == 0) n /= d;
            }
        if (n > 1) primes.push_back(n);
        FqElem g = FqElem::one(field_);
        for (unsigned long idx = 1; idx < q_; ++idx) {
            FqElem cand = FqElem::from_index(field_, idx);
            bool ok = true;
            for (unsigned long ell : primes)
                if (cand.pow(Int(static_cast<unsigned long>((q_ - 1) / ell))) == FqElem::one(field_)) {
                    ok = false;
                    break;
                }
            if (ok) { g = cand; break; }
        }
        exp_.resize(2 * (q_ - 1));
        log_.assign(q_, 0);
        FqElem cur = FqElem::one(field_);
        for (unsigned long i = 0; i < q_ - 1; ++i) {
            unsigned long idx = cur.index();
            exp_[i] = idx;
            exp_[i + (q_ - 1)] = idx;
            log_[idx] = i;
            cur = cur * g;
        }
        if (!(cur == FqElem::one(field_)))
            throw std::logic_error("FqEngine: generator order check failed");
    }

    FieldPtr field_;
    unsigned long p_ = 0, m_ = 0, q_ = 0;
    std::vector<unsigned long> ppow_;
    std::vector<std::uint16_t> digs_;
    std::vector<unsigned long> exp_;
    std::vector<unsigned long> log_;
};

struct CompiledFqTerm {
    unsigned long coeff;
    std::vector<std::pair<unsigned, unsigned>> varexps; // (variable, exponent)
};

struct CompiledFqPoly {
    std::vector<CompiledFqTerm> terms;
};

std::vector<CompiledFqPoly> compile_fq(const VarietyPresentation& v, const FieldPtr& field) {
    std::vector<CompiledFqPoly> out;
    for (const auto& f : v.polys) {
        CompiledFqPoly cp;
        for (const auto& t : f.terms()) {
            Int c = t.coeff % field->p;
            if (c < 0) c += field->p;
            if (c == 0) continue;
            CompiledFqTerm ct;
            ct.coeff = c.get_ui(); // prime-field residues sit at index c
            for (unsigned i = 0; i < t.exps.size(); ++i)
                if (t.exps[i] > 0) ct.varexps.emplace_back(i, t.exps[i]);
            cp.terms.push_back(std::move(ct));
        }
        out.push_back(std::move(cp));
    }
    return out;
}

// Enumeration core over the table engine. Index tuples are visited in
// x0-major order; `visit` sees each solution exactly once. The engine may be
// null for an empty system, which has nothing to evaluate.
template <class Visit>
void fq_run_chunk(const FqEngine* E, unsigned long q, const std::vector<CompiledFqPoly>& polys,
                  std::size_t ncoords, unsigned long lo, unsigned long hi, Visit&& visit) {
    if (lo >= hi) return;
    std::vector<unsigned long> idx(ncoords, 0);
    unsigned long t = lo;
    for (std::size_t j = ncoords; j-- > 0;) {
        idx[j] = t % q;
        t /= q;
    }
    for (unsigned long lin = lo; lin < hi; ++lin) {
        bool solution = true;
        for (const auto& f : polys) {
            unsigned long acc = 0;
            for (const auto& term : f.terms) {
                unsigned long val = term.coeff;
                for (const auto& [var, e] : term.varexps) {
                    unsigned long x = idx[var];
                    if (x == 0) { val = 0; break; }
                    val = E->mul(val, E->pow(x, e));
                }
                acc = E->add(acc, val);
            }
            if (acc != 0) { solution = false; break; }
        }
        if (solution) visit(idx);
        for (std::size_t j = ncoords; j-- > 0;) {
            if (++idx[j] < q) break;
            idx[j] = 0;
        }
    }
}

// Fallback for fields beyond the table limit: coordinates are tracked as
// FqElem values alongside the index odometer.
template <class Visit>
void fq_run_chunk_big(const VarietyPresentation& v, const FieldPtr& field,
                      std::size_t ncoords, const Int& lo, const Int& hi, Visit&& visit) {
    if (lo >= hi) return;
    Int q = field->q();
    if (!q.fits_ulong_p())
        throw std::invalid_argument("enumeration: field too large");
    std::vector<unsigned long> idx(ncoords, 0);
    std::vector<FqElem> pt;
    Int t = lo;
    for (std::size_t j = ncoords; j-- > 0;) {
        Int d = t % q;
        idx[j] = d.get_ui();
        t /= q;
    }
    for (std::size_t j = 0; j < ncoords; ++j) pt.push_back(FqElem::from_index(field, idx[j]));
    for (Int lin = lo; lin < hi; ++lin) {
        bool solution = true;
        for (const auto& f : v.polys)
            if (!eval_poly(f, pt).is_zero()) { solution = false; break; }
        if (solution) visit(idx);
        for (std::size_t j = ncoords; j-- > 0;) {
            if (++idx[j] < q.get_ui()) {
                pt[j] = FqElem::from_index(field, idx[j]);
                break;
            }
            idx[j] = 0;
            pt[j] = FqElem::from_index(field, 0);
        }
    }
}

Int fq_space_size(const FieldPtr& field, std::size_t ncoords) {
    Int q = field->q();
    Int total(1);
    for (std::size_t i = 0; i < ncoords; ++i) total *= q;
    return total;
}

// Counts solutions over the whole tuple space, in parallel over contiguous
// ranges. The result is a plain sum of per-range counts, so it cannot depend
// on the worker count or schedule.
Int fq_count_space(const VarietyPresentation& v, const FieldPtr& field, std::size_t ncoords,
                   const CountOptions& opts) {
    Int total = fq_space_size(field, ncoords);
    if (total > opts.budget) throw BudgetExceeded(total, opts.budget);
    if (!total.fits_ulong_p())
        throw std::invalid_argument("count_Fq: tuple space too large to enumerate");
    bool tables = v.polys.empty() || field->q() <= kTableLimit;
    std::unique_ptr<FqEngine> engine;
    if (tables && !v.polys.empty()) engine = std::make_unique<FqEngine>(field);
    auto compiled = engine ? compile_fq(v, field) : std::vector<CompiledFqPoly>{};
    unsigned long q_small = 0;
    if (tables) {
        Int q = field->q();
        if (!q.fits_ulong_p())
            throw std::invalid_argument("count_Fq: field too large to enumerate");
        q_small = q.get_ui();
    }

    int workers = opts.workers;
    std::vector<unsigned long long> counts(static_cast<std::size_t>(workers), 0);
    auto ranges = split_range(total, workers);
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w]() {
            unsigned long long c = 0;
            if (tables) {
                unsigned long lo = ranges[static_cast<std::size_t>(w)].lo.get_ui();
                unsigned long hi = ranges[static_cast<std::size_t>(w)].hi.get_ui();
                fq_run_chunk(engine.get(), q_small, compiled, ncoords, lo, hi,
                             [&](const std::vector<unsigned long>&) { ++c; });
            } else {
                fq_run_chunk_big(v, field, ncoords, ranges[static_cast<std::size_t>(w)].lo,
                                 ranges[static_cast<std::size_t>(w)].hi,
                                 [&](const std::vector<unsigned long>&) { ++c; });
            }
            counts[static_cast<std::size_t>(w)] = c;
        });
    }
    for (auto& th : pool) th.join();
    Int sum(0);
    for (auto c : counts) sum += Int(static_cast<unsigned long>(c));
    return sum;
}

} // namespace

Int count_Fq(const VarietyPresentation& v, const FieldPtr& field, const CountOptions& opts) {
    check_options(opts);
    std::size_t ncoords = v.ambient.coords();
    if (v.ambient.type == Ambient::Type::Affine)
        return fq_count_space(v, field, ncoords, opts);
    // projective: count the affine cone, strip the origin, divide by the
    // number of scalings
    Int cone = fq_count_space(v, field, ncoords, opts);
    Int q = field->q();
    if ((cone - 1) % (q - 1) != 0)
        throw std::logic_error("count_Fq: cone count not congruent to 1 mod q-1");
    Int n = (cone - 1) / (q - 1);
    // sanity: a closed subvariety cannot out-count its ambient projective space
    Int ambient_pts = (int_pow(q, static_cast<unsigned long>(v.ambient.dim) + 1) - 1) / (q - 1);
    if (n > ambient_pts)
        throw std::logic_error("count_Fq: projective count exceeds ambient space");
    return n;
}

void enumerate_fq_solutions(const VarietyPresentation& v, const FieldPtr& field,
                            const ChunkRange& chunk,
                            const std::function<void(const std::vector<unsigned long>&)>& visit) {
    std::size_t ncoords = v.ambient.coords();
    Int total = fq_space_size(field, ncoords);
    if (chunk.lo < 0 || chunk.hi > total || chunk.lo > chunk.hi)
        throw std::invalid_argument("enumerate_fq_solutions: chunk out of range");
    if (v.polys.empty() || field->q() <= kTableLimit) {
        if (!chunk.hi.fits_ulong_p() || !field->q().fits_ulong_p())
            throw std::invalid_argument("enumerate_fq_solutions: chunk too large");
        std::unique_ptr<FqEngine> engine;
        if (!v.polys.empty()) engine = std::make_unique<FqEngine>(field);
        auto compiled = engine ? compile_fq(v, field) : std::vector<CompiledFqPoly>{};
        fq_run_chunk(engine.get(), field->q().get_ui(), compiled, ncoords,
                     chunk.lo.get_ui(), chunk.hi.get_ui(), visit);
    } else {
        fq_run_chunk_big(v, field, ncoords, chunk.lo, chunk.hi, visit);
    }
}

// ---------------------------------------------------------------------------
// p-adic tree enumeration

namespace {

struct CompiledZmodTerm {
    Int coeff;
    std::vector<std::pair<unsigned, unsigned>> varexps;
};

struct CompiledZmodPoly {
    std::vector<CompiledZmodTerm> terms;
};

std::vector<CompiledZmodPoly> compile_zmod(const VarietyPresentation& v) {
    std::vector<CompiledZmodPoly> out;
    for (const auto& f : v.polys) {
        CompiledZmodPoly cp;
        for (const auto& t : f.terms()) {
            CompiledZmodTerm ct;
            ct.coeff = t.coeff;
            for (unsigned i = 0; i < t.exps.size(); ++i)
                if (t.exps[i] > 0) ct.varexps.emplace_back(i, t.exps[i]);
            cp.terms.push_back(std::move(ct));
        }
        out.push_back(std::move(cp));
    }
    return out;
}

bool zmod_is_solution(const std::vector<CompiledZmodPoly>& polys, const Int* vals,
                      const Int& modulus) {
    Int acc, term, tmp;
    for (const auto& f : polys) {
        acc = 0;
        for (const auto& t : f.terms) {
            term = t.coeff % modulus;
            for (const auto& [var, e] : t.varexps) {
                mpz_powm_ui(tmp.get_mpz_t(), vals[var].get_mpz_t(), e, modulus.get_mpz_t());
                term = term * tmp % modulus;
            }
            acc = (acc + term) % modulus;
        }
        if (acc != 0) return false;
    }
    return true;
}

// Solution lists are flattened tuples in deterministic order: level-1 tuples
// in x0-major order, deeper levels parent-major with lift offsets x0-major.
class PadicTree {
public:
    PadicTree(const VarietyPresentation& v, long p, const CountOptions& opts)
        : v_(v), p_(p), nc_(v.ambient.coords()), opts_(opts), polys_(compile_zmod(v)) {
        if (v.ambient.type == Ambient::Type::Projective)
            throw std::invalid_argument("p-adic counting requires an affine presentation");
        if (!is_prime(p)) throw std::invalid_argument("p-adic counting: p must be prime");
    }

    long level() const { return level_; }
    std::size_t count() const { return sols_.size() / nc_; }
    const std::vector<Int>& solutions() const { return sols_; }
    std::size_t ncoords() const { return nc_; }

    // root-space restriction used by the chunked enumeration API
    void run_level1(const ChunkRange& chunk) {
        Int space(1);
        for (std::size_t i = 0; i < nc_; ++i) space *= p_;
        if (chunk.lo < 0 || chunk.hi > space || chunk.lo > chunk.hi)
            throw std::invalid_argument("p-adic enumeration: chunk out of range");
        spend(chunk.hi - chunk.lo);
        Int modulus(p_);
        std::vector<Int> pt(nc_);
        for (Int lin = chunk.lo; lin < chunk.hi; ++lin) {
            Int t = lin;
            for (std::size_t j = nc_; j-- > 0;) {
                pt[j] = t % p_;
                t /= p_;
            }
            if (zmod_is_solution(polys_, pt.data(), modulus))
                sols_.insert(sols_.end(), pt.begin(), pt.end());
        }
        level_ = 1;
    }

    // refine solutions mod p^level into solutions mod p^{level+1}
    void advance() {
        if (level_ < 1) throw std::logic_error("PadicTree: advance before level 1");
        unsigned long lifts = 1;
        for (std::size_t i = 0; i < nc_; ++i) lifts *= static_cast<unsigned long>(p_);
        spend(Int(static_cast<unsigned long>(count())) * Int(lifts));
        Int step = int_pow(Int(p_), static_cast<unsigned long>(level_));
        Int modulus = step * p_;
        std::size_t parents = count();

        int workers = std::max(1, std::min<int>(opts_.workers, static_cast<int>(parents ? parents : 1)));
        std::vector<std::vector<Int>> outs(static_cast<std::size_t>(workers));
        auto slices = split_range(Int(static_cast<unsigned long>(parents)), workers);
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&, w]() {
                std::vector<Int>& out = outs[static_cast<std::size_t>(w)];
                std::vector<Int> cand(nc_);
                std::vector<unsigned long> delta(nc_, 0);
                for (std::size_t pi = slices[static_cast<std::size_t>(w)].lo.get_ui();
                     pi < slices[static_cast<std::size_t>(w)].hi.get_ui(); ++pi) {
                    const Int* parent = sols_.data() + pi * nc_;
                    std::fill(delta.begin(), delta.end(), 0);
                    for (unsigned long l = 0; l < lifts; ++l) {
                        for (std::size_t j = 0; j < nc_; ++j)
                            cand[j] = parent[j] + step * static_cast<unsigned long>(delta[j]);
                        if (zmod_is_solution(polys_, cand.data(), modulus))
                            out.insert(out.end(), cand.begin(), cand.end());
                        for (std::size_t j = nc_; j-- > 0;) {
                            if (++delta[j] < static_cast<unsigned long>(p_)) break;
                            delta[j] = 0;
                        }
                    }
                }
            });
        }
        for (auto& th : pool) th.join();
        std::vector<Int> merged;
        for (auto& o : outs) merged.insert(merged.end(), o.begin(), o.end());
        sols_ = std::move(merged);
        ++level_;
    }

    void advance_to(long target_level) {
        while (level_ < target_level) advance();
    }

private:
    void spend(const Int& tuples) {
        visited_ += tuples;
        if (visited_ > opts_.budget) throw BudgetExceeded(visited_, opts_.budget);
    }

    const VarietyPresentation& v_;
    long p_;
    std::size_t nc_;
    CountOptions opts_;
    std::vector<CompiledZmodPoly> polys_;
    std::vector<Int> sols_;
    long level_ = 0;
    Int visited_{0};
};

Int full_root_space(long p, std::size_t nc) {
    Int space(1);
    for (std::size_t i = 0; i < nc; ++i) space *= p;
    return space;
}

} // namespace

Int count_padic(const VarietyPresentation& v, long p, long n, const CountOptions& opts) {
    check_options(opts);
    if (n < 0) throw std::invalid_argument("count_padic: level must be >= 0");
    PadicTree tree(v, p, opts);
    tree.run_level1(ChunkRange{Int(0), full_root_space(p, v.ambient.coords())});
    tree.advance_to(n + 1);
    return Int(static_cast<unsigned long>(tree.count()));
}

void enumerate_padic_solutions(const VarietyPresentation& v, long p, long level,
                               const ChunkRange& chunk,
                               const std::function<void(const std::vector<Int>&)>& visit) {
    if (level < 1) throw std::invalid_argument("enumerate_padic_solutions: level must be >= 1");
    CountOptions opts;
    opts.workers = 1;
    PadicTree tree(v, p, opts);
    tree.run_level1(chunk);
    tree.advance_to(level);
    std::size_t nc = tree.ncoords();
    std::vector<Int> pt(nc);
    for (std::size_t i = 0; i < tree.count(); ++i) {
        for (std::size_t j = 0; j < nc; ++j) pt[j] = tree.solutions()[i * nc + j];
        visit(pt);
    }
}

void audit_smoothness(const VarietyPresentation& v, long p, const CountOptions& opts) {
    if (v.ambient.type == Ambient::Type::Projective)
        throw std::invalid_argument("audit_smoothness: affine presentations only");
    PadicTree tree(v, p, opts);
    tree.run_level1(ChunkRange{Int(0), full_root_space(p, v.ambient.coords())});
    std::size_t nc = tree.ncoords();
    long expected = static_cast<long>(v.polys.size());
    for (std::size_t i = 0; i < tree.count(); ++i) {
        std::vector<ZmodElem> pt;
        pt.reserve(nc);
        for (std::size_t j = 0; j < nc; ++j)
            pt.emplace_back(p, 1, tree.solutions()[i * nc + j]);
        if (jacobian_rank_at(v, pt) != expected) {
            std::string coords;
            for (std::size_t j = 0; j < nc; ++j)
                coords += (j ? "," : "") + pt[j].value().get_str();
            throw std::domain_error("smoothness audit failed mod " + std::to_string(p) +
                                    " at point (" + coords + ")");
        }
    }
}

LiftableCount count_liftable(const VarietyPresentation& v, long p, long n, long window,
                             const CountOptions& opts) {
    check_options(opts);
    if (n < 0) throw std::invalid_argument("count_liftable: level must be >= 0");
    if (window < 1) throw std::invalid_argument("count_liftable: window must be >= 1");

    if (v.declared_smooth.value_or(false)) {
        audit_smoothness(v, p, opts);
        Int value = count_padic(v, p, n, opts);
        return LiftableCount{value, value, n, window, true};
    }

    PadicTree tree(v, p, opts);
    tree.run_level1(ChunkRange{Int(0), full_root_space(p, v.ambient.coords())});
    tree.advance_to(n + 1);
    Int igusa_value(static_cast<unsigned long>(tree.count()));
    Int proj_modulus = int_pow(Int(p), static_cast<unsigned long>(n) + 1);
    std::size_t nc = tree.ncoords();

    auto image_size = [&]() {
        std::unordered_set<std::string> image;
        std::string key;
        Int r;
        for (std::size_t i = 0; i < tree.count(); ++i) {
            key.clear();
            for (std::size_t j = 0; j < nc; ++j) {
                r = tree.solutions()[i * nc + j] % proj_modulus;
                key += r.get_str();
                key += ',';
            }
            image.insert(key);
        }
        return Int(static_cast<unsigned long>(image.size()));
    };

    const long m_ceiling = n + 12;
    Int value = image_size(); // image at m = n is X(Z/p^{n+1}) itself
    long m = n;
    long streak = 0;
    while (streak < window) {
        if (m >= m_ceiling) throw UnstableCount(m, value);
        ++m;
        tree.advance();
        Int next = image_size();
        if (next > value)
            throw std::logic_error("count_liftable: projected image grew while refining");
        if (next == value) ++streak;
        else streak = 0;
        value = next;
    }
    return LiftableCount{value, igusa_value, m, window, false};
}

// ---------------------------------------------------------------------------
// sequences and cache plumbing

std::string count_kind_name(CountKind k) {
    switch (k) {
        case CountKind::Weil: return "weil";
        case CountKind::Igusa: return "igusa";
        case CountKind::Serre: return "serre";
    }
    return "?";
}

CountSequence weil_counts(const VarietyPresentation& v, long p, long m, long order,
                          const CountOptions& opts, CountCache* cache) {
    if (m < 1) throw std::invalid_argument("weil_counts: extension degree must be >= 1");
    if (order < 1) throw std::invalid_argument("weil_counts: order must be >= 1");
    CountSequence seq;
    seq.kind = CountKind::Weil;
    seq.variety_name = v.name;
    seq.hash = variety_hash(v);
    seq.p = p;
    seq.m = m;
    seq.n_min = 1;
    for (long n = 1; n <= order; ++n) {
        Int value;
        auto hit = cache && cache->enabled()
                       ? cache->lookup(seq.hash, CountKind::Weil, p, m, n)
                       : std::nullopt;
        if (hit) {
            value = hit->value;
        } else {
            FieldPtr field = field_make(p, m * n);
            value = count_Fq(v, field, opts);
            if (cache && cache->enabled())
                cache->store(seq.hash, CountKind::Weil, p, m, n, value);
        }
        seq.values.push_back(value);
    }
    return seq;
}

CountSequence igusa_counts(const VarietyPresentation& v, long p, long order,
                           const CountOptions& opts, CountCache* cache) {
    if (order < 0) throw std::invalid_argument("igusa_counts: order must be >= 0");
    CountSequence seq;
    seq.kind = CountKind::Igusa;
    seq.variety_name = v.name;
    seq.hash = variety_hash(v);
    seq.p = p;
    seq.m = 1;
    seq.n_min = 0;
    for (long n = 0; n <= order; ++n) {
        Int value;
        auto hit = cache && cache->enabled()
                       ? cache->lookup(seq.hash, CountKind::Igusa, p, 1, n)
                       : std::nullopt;
        if (hit) {
            value = hit->value;
        } else {
            value = count_padic(v, p, n, opts);
            if (cache && cache->enabled())
                cache->store(seq.hash, CountKind::Igusa, p, 1, n, value);
        }
        seq.values.push_back(value);
    }
    return seq;
}

CountSequence serre_counts(const VarietyPresentation& v, long p, long order, long window,
                           const CountOptions& opts, CountCache* cache) {
    if (order < 0) throw std::invalid_argument("serre_counts: order must be >= 0");
    CountSequence seq;
    seq.kind = CountKind::Serre;
    seq.variety_name = v.name;
    seq.hash = variety_hash(v);
    seq.p = p;
    seq.m = 1;
    seq.n_min = 0;
    for (long n = 0; n <= order; ++n) {
        Int value;
        CountSequence::Meta meta;
        auto hit = cache && cache->enabled()
                       ? cache->lookup(seq.hash, CountKind::Serre, p, 1, n, window)
                       : std::nullopt;
        if (hit) {
            value = hit->value;
            meta = hit->meta;
        } else {
            LiftableCount lc = count_liftable(v, p, n, window, opts);
            if (lc.value > lc.igusa_value)
                throw std::logic_error("serre_counts: liftable count exceeds Igusa count");
            value = lc.value;
            meta.m_reached = lc.m_reached;
            meta.window = lc.window;
            meta.smooth = lc.smooth_shortcut;
            if (cache && cache->enabled()) {
                cache->store(seq.hash, CountKind::Serre, p, 1, n, value, meta, window);
                cache->store(seq.hash, CountKind::Igusa, p, 1, n, lc.igusa_value);
            }
        }
        seq.values.push_back(value);
        seq.meta.push_back(meta);
    }
    return seq;
}

} // namespace zetaforge
