#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>
#include "zetaforge/fq.hpp"
#include "zetaforge/variety.hpp"

namespace zetaforge {

class CountCache;

struct CountOptions {
    int workers = 1;
    // Cap on ring tuples visited during one counting call. Exceeding it is an
    // error, never an approximation.
    Int budget = Int(100000000);
};

class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(Int required, Int budget)
        : std::runtime_error("enumeration budget exceeded: needs " + required.get_str() +
                             " ring tuples, budget " + budget.get_str()),
          required(std::move(required)), budget(std::move(budget)) {}
    Int required;
    Int budget;
};

// Liftable-count stabilization ran out of precision before the image size
// settled. Reported rather than guessed.
class UnstableCount : public std::runtime_error {
public:
    UnstableCount(long m_max, Int last_value)
        : std::runtime_error("liftable count did not stabilize by precision m = " +
                             std::to_string(m_max) + " (last image size " +
                             last_value.get_str() + ")"),
          m_max(m_max), last_value(std::move(last_value)) {}
    long m_max;
    Int last_value;
};

// Half-open range of the linearized residue space (x0-major order).
struct ChunkRange {
    Int lo;
    Int hi;
};

// Partition [0, total) into `chunks` contiguous ranges covering everything.
std::vector<ChunkRange> split_range(const Int& total, int chunks);

// |X(F_q)| by exhaustive enumeration. Projective presentations are counted
// through the affine cone: (cone - 1) / (q - 1), with exact divisibility
// enforced.
Int count_Fq(const VarietyPresentation& v, const FieldPtr& field,
             const CountOptions& opts = {});

// Streams every solution in the chunk exactly once, in x0-major index order.
// Tuples carry the field-element index of each coordinate.
void enumerate_fq_solutions(const VarietyPresentation& v, const FieldPtr& field,
                            const ChunkRange& chunk,
                            const std::function<void(const std::vector<unsigned long>&)>& visit);

// |X(Z/p^{n+1})| for an affine presentation, by p-adic tree lifting: level-k
// solutions are refined out of level-(k-1) ones, so only genuine candidate
// lifts are ever visited.
Int count_padic(const VarietyPresentation& v, long p, long n,
                const CountOptions& opts = {});

// Solutions mod p^level, restricted to a chunk of the mod-p root space.
void enumerate_padic_solutions(const VarietyPresentation& v, long p, long level,
                               const ChunkRange& chunk,
                               const std::function<void(const std::vector<Int>&)>& visit);

struct LiftableCount {
    Int value;       // stabilized image size
    Int igusa_value; // |X(Z/p^{n+1})|, a byproduct of the same tree
    long m_reached = 0;
    long window = 0;
    bool smooth_shortcut = false;
};

// Number of points of X(Z/p^{n+1}) in the image of the full solution tree:
// the image of solutions mod p^{m+1} is computed for increasing m until its
// size is unchanged for `window` consecutive increments (ceiling m <= n+12,
// beyond which UnstableCount is thrown). For an audited smooth presentation
// every approximate solution lifts, and the Igusa count is returned directly.
LiftableCount count_liftable(const VarietyPresentation& v, long p, long n, long window,
                             const CountOptions& opts = {});

// Verifies the smoothness certificate: the Jacobian has full row rank at
// every solution mod p. Throws if the audit fails.
void audit_smoothness(const VarietyPresentation& v, long p, const CountOptions& opts = {});

enum class CountKind { Weil, Igusa, Serre };

std::string count_kind_name(CountKind k);

// A tagged run of exact counts, indexed from n = 1 (weil) or n = 0
// (igusa/serre), together with the parameters that produced it.
struct CountSequence {
    struct Meta {
        long m_reached = 0;
        long window = 0;
        bool smooth = false;
    };

    CountKind kind = CountKind::Weil;
    std::string variety_name;
    std::string hash;
    long p = 0;
    long m = 1; // weil counts N_n live over F_{p^{m n}}
    long n_min = 0;
    std::vector<Int> values;
    std::vector<Meta> meta; // serre only, aligned with values
};

// Sequence builders; cache may be null. Counts come from the cache when an
// entry matches and are recomputed (and stored) otherwise.
CountSequence weil_counts(const VarietyPresentation& v, long p, long m, long order,
                          const CountOptions& opts = {}, CountCache* cache = nullptr);
CountSequence igusa_counts(const VarietyPresentation& v, long p, long order,
                           const CountOptions& opts = {}, CountCache* cache = nullptr);
CountSequence serre_counts(const VarietyPresentation& v, long p, long order, long window,
                           const CountOptions& opts = {}, CountCache* cache = nullptr);

} // namespace zetaforge
