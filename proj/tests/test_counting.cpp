#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include "zetaforge/cache.hpp"
#include "zetaforge/counting.hpp"

using namespace zetaforge;

namespace {

VarietyPresentation make_variety(const std::string& json) { return parse_variety(json); }

const char* kFatPoint =
    R"({"name":"fat","ambient":{"type":"affine","dim":1},"polys":["x0^2"]})";
const char* kP1 =
    R"({"name":"p1","ambient":{"type":"projective","dim":1},"polys":[]})";
const char* kAffineCurve =
    R"({"name":"ec-affine","ambient":{"type":"affine","dim":2},"polys":["x1^2 - x0^3 - x0 - 1"]})";
const char* kLine = R"({"name":"a1","ambient":{"type":"affine","dim":1},"polys":[]})";
const char* kSmoothLine =
    R"({"name":"a1s","ambient":{"type":"affine","dim":1},"polys":[],"smooth":true})";
const char* kObstructed =
    R"({"name":"x2-3","ambient":{"type":"affine","dim":1},"polys":["x0^2 - 3"]})";
const char* kSmoothCurve =
    R"({"name":"ec5","ambient":{"type":"affine","dim":2},"polys":["x1^2 - x0^3 + x0 + 1"],"smooth":true})";

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("zf-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    static int counter() {
        static int c = 0;
        return c++;
    }
};

} // namespace

TEST_CASE("count_Fq on the spec examples") {
    CHECK(count_Fq(make_variety(kP1), field_make(3, 1)) == 4);
    CHECK(count_Fq(make_variety(kFatPoint), field_make(5, 1)) == 1);
    CHECK(count_Fq(make_variety(kAffineCurve), field_make(5, 1)) == 8);
}

TEST_CASE("empty systems count the whole space") {
    VarietyPresentation a2 = make_variety(
        R"({"name":"a2","ambient":{"type":"affine","dim":2},"polys":[]})");
    for (long m = 1; m <= 3; ++m)
        CHECK(count_Fq(a2, field_make(2, m)) == int_pow(Int(2), 2 * m));
    // projective spaces hit (q^{m+1}-1)/(q-1) on the nose
    VarietyPresentation p2 = make_variety(
        R"({"name":"p2","ambient":{"type":"projective","dim":2},"polys":[]})");
    CHECK(count_Fq(p2, field_make(2, 1)) == 7);
    CHECK(count_Fq(p2, field_make(3, 1)) == 13);
    CHECK(count_Fq(p2, field_make(2, 2)) == 21);
}

TEST_CASE("weil counts work through extension towers") {
    // the fat point has exactly one solution everywhere
    VarietyPresentation fat = make_variety(kFatPoint);
    CountSequence seq = weil_counts(fat, 5, 1, 4);
    CHECK(seq.values == std::vector<Int>{1, 1, 1, 1});
    // P^1 over F_9: N_n = 9^n + 1
    CountSequence p1 = weil_counts(make_variety(kP1), 3, 2, 2);
    CHECK(p1.values == std::vector<Int>{10, 82});
}

TEST_CASE("count_padic on the spec examples") {
    CHECK(count_padic(make_variety(kLine), 3, 2) == 27);
    CHECK(count_padic(make_variety(kFatPoint), 3, 1) == 3);
    CHECK(count_padic(make_variety(kFatPoint), 3, 3) == 9);
    CHECK_THROWS_AS(count_padic(make_variety(kP1), 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(count_padic(make_variety(kLine), 4, 1), std::invalid_argument);
}

TEST_CASE("enumerate_padic_solutions emits solutions in order") {
    std::vector<Int> seen;
    enumerate_padic_solutions(make_variety(kFatPoint), 3, 2, ChunkRange{Int(0), Int(3)},
                              [&](const std::vector<Int>& pt) { seen.push_back(pt[0]); });
    CHECK(seen == std::vector<Int>{0, 3, 6});
}

TEST_CASE("enumerate_fq_solutions finds units and their inverses") {
    VarietyPresentation v = make_variety(
        R"({"name":"hyper","ambient":{"type":"affine","dim":2},"polys":["x0*x1 - 1"]})");
    auto f3 = field_make(3, 1);
    std::set<std::pair<unsigned long, unsigned long>> sols;
    // two chunks split by x0 (x0-major linearization)
    for (const auto& chunk : split_range(Int(9), 2))
        enumerate_fq_solutions(v, f3, chunk, [&](const std::vector<unsigned long>& pt) {
            sols.insert({pt[0], pt[1]});
        });
    CHECK(sols == std::set<std::pair<unsigned long, unsigned long>>{{1, 1}, {2, 2}});
}

TEST_CASE("empty system emits every tuple") {
    VarietyPresentation v = make_variety(
        R"({"name":"a2","ambient":{"type":"affine","dim":2},"polys":[]})");
    int tuples = 0;
    enumerate_fq_solutions(v, field_make(2, 1), ChunkRange{Int(0), Int(4)},
                           [&](const std::vector<unsigned long>&) { ++tuples; });
    CHECK(tuples == 4);
}

TEST_CASE("chunk invariance: totals agree under 1, 2 and 7 chunks") {
    struct Probe {
        const char* json;
        long p, m;
    };
    for (const Probe& probe : {Probe{kFatPoint, 5, 1}, Probe{kAffineCurve, 3, 1}, Probe{kP1, 2, 2}}) {
        VarietyPresentation v = make_variety(probe.json);
        auto field = field_make(probe.p, probe.m);
        Int q = field->q();
        Int total(1);
        for (std::size_t i = 0; i < v.ambient.coords(); ++i) total *= q;
        std::vector<Int> per_chunkcounts;
        for (int chunks : {1, 2, 7}) {
            Int sum(0);
            for (const auto& chunk : split_range(total, chunks)) {
                enumerate_fq_solutions(v, field, chunk,
                                       [&](const std::vector<unsigned long>&) { sum += 1; });
            }
            per_chunkcounts.push_back(sum);
        }
        CHECK(per_chunkcounts[0] == per_chunkcounts[1]);
        CHECK(per_chunkcounts[0] == per_chunkcounts[2]);
        // and the threaded counter agrees with the chunked enumeration
        for (int workers : {1, 2, 7}) {
            CountOptions opts;
            opts.workers = workers;
            Int direct = count_Fq(v, field, opts);
            Int expected = per_chunkcounts[0];
            if (v.ambient.type == Ambient::Type::Projective)
                expected = (expected - 1) / (q - 1);
            CHECK(direct == expected);
        }
    }
}

TEST_CASE("padic counts are worker independent") {
    VarietyPresentation curve = make_variety(kAffineCurve);
    std::vector<Int> values;
    for (int workers : {1, 2, 7}) {
        CountOptions opts;
        opts.workers = workers;
        values.push_back(count_padic(curve, 5, 2, opts));
    }
    CHECK(values[0] == values[1]);
    CHECK(values[0] == values[2]);
}

TEST_CASE("count_liftable on the spec examples") {
    // fat point: only x = 0 lifts
    LiftableCount fat = count_liftable(make_variety(kFatPoint), 3, 1, 2);
    CHECK(fat.value == 1);
    CHECK(fat.igusa_value == 3);
    CHECK(fat.m_reached == 4);
    CHECK_FALSE(fat.smooth_shortcut);

    // smooth affine line: the audit passes and the Igusa count is reused
    LiftableCount line = count_liftable(make_variety(kSmoothLine), 5, 2, 2);
    CHECK(line.value == 125);
    CHECK(line.smooth_shortcut);

    // x^2 = 3 over Z_3: a mod-3 solution exists but dies at the next level
    LiftableCount obstructed = count_liftable(make_variety(kObstructed), 3, 0, 2);
    CHECK(obstructed.value == 0);
    CHECK(obstructed.igusa_value == 1);
}

TEST_CASE("liftable equals igusa for an audited smooth curve") {
    VarietyPresentation curve = make_variety(kSmoothCurve);
    for (long n = 0; n <= 3; ++n) {
        LiftableCount lc = count_liftable(curve, 5, n, 2);
        CHECK(lc.smooth_shortcut);
        CHECK(lc.value == lc.igusa_value);
        CHECK(lc.value == Int(7) * int_pow(Int(5), static_cast<unsigned long>(n)));
    }
    // the same equality must come out of the stabilized projection route
    VarietyPresentation undeclared = make_variety(kAffineCurve);
    // different polynomial, same smoothness structure mod 5; compare directly
    for (long n = 0; n <= 2; ++n) {
        LiftableCount lc = count_liftable(undeclared, 5, n, 2);
        CHECK_FALSE(lc.smooth_shortcut);
        CHECK(lc.value == lc.igusa_value);
        CHECK(lc.value == count_padic(undeclared, 5, n));
    }
}

TEST_CASE("smoothness audit rejects the fat point") {
    VarietyPresentation cheat = make_variety(
        R"({"name":"cheat","ambient":{"type":"affine","dim":1},"polys":["x0^2"],"smooth":true})");
    CHECK_THROWS_WITH_AS(count_liftable(cheat, 3, 1, 2), doctest::Contains("audit"),
                         std::domain_error);
}

TEST_CASE("liftable counts never exceed igusa counts") {
    for (const char* json : {kFatPoint, kObstructed, kAffineCurve}) {
        VarietyPresentation v = make_variety(json);
        for (long n = 0; n <= 2; ++n) {
            LiftableCount lc = count_liftable(v, 3, n, 2);
            CHECK(lc.value <= lc.igusa_value);
            CHECK(lc.igusa_value == count_padic(v, 3, n));
        }
    }
}

TEST_CASE("budget violations are hard errors") {
    CountOptions opts;
    opts.budget = 10;
    CHECK_THROWS_AS(count_Fq(make_variety(kP1), field_make(5, 1), opts), BudgetExceeded);
    CHECK_THROWS_AS(count_padic(make_variety(kFatPoint), 5, 3, opts), BudgetExceeded);
    try {
        count_Fq(make_variety(kP1), field_make(5, 1), opts);
        CHECK(false);
    } catch (const BudgetExceeded& e) {
        CHECK(e.required == 25);
        CHECK(e.budget == 10);
    }
}

TEST_CASE("stabilization that runs out of precision reports Unstable") {
    // x^2 = 0 stabilizes at m = 2n+1, beyond the n+12 ceiling once n > 11
    VarietyPresentation fat = make_variety(kFatPoint);
    CHECK_THROWS_AS(count_liftable(fat, 2, 12, 2), UnstableCount);
    try {
        count_liftable(fat, 2, 12, 2);
    } catch (const UnstableCount& e) {
        CHECK(e.m_max == 24);
        CHECK(e.last_value == 1); // the true value appears exactly at the ceiling
    }
}

TEST_CASE("count cache round trips and is bit-identical to recomputation") {
    TempDir tmp;
    VarietyPresentation fat = make_variety(kFatPoint);
    CountCache cache(tmp.path.string());
    CountOptions opts;

    CountSequence cold = igusa_counts(fat, 3, 5, opts, &cache);
    CountSequence warm = igusa_counts(fat, 3, 5, opts, &cache);
    CountSequence none = igusa_counts(fat, 3, 5, opts, nullptr);
    CHECK(cold.values == warm.values);
    CHECK(cold.values == none.values);

    // the cache file exists and has one record per level
    int files = 0, lines = 0;
    for (const auto& entry : std::filesystem::directory_iterator(tmp.path)) {
        ++files;
        std::ifstream in(entry.path());
        std::string line;
        while (std::getline(in, line))
            if (!line.empty()) ++lines;
    }
    CHECK(files == 1);
    CHECK(lines == 6);

    // serre entries are keyed by window: a different window recomputes
    CountSequence s2 = serre_counts(fat, 3, 2, 2, opts, &cache);
    CountSequence s3 = serre_counts(fat, 3, 2, 3, opts, &cache);
    CHECK(s2.values == s3.values);
    CHECK(s2.meta[1].m_reached == 4);
    CHECK(s3.meta[1].m_reached == 5);
    CountSequence s2again = serre_counts(fat, 3, 2, 2, opts, &cache);
    CHECK(s2again.meta[1].m_reached == 4);
}

TEST_CASE("weil cache hits reproduce computed counts") {
    TempDir tmp;
    CountCache cache(tmp.path.string());
    VarietyPresentation p1 = make_variety(kP1);
    CountSequence a = weil_counts(p1, 2, 1, 5, {}, &cache);
    CountSequence b = weil_counts(p1, 2, 1, 5, {}, &cache);
    CHECK(a.values == b.values);
    CHECK(a.values == std::vector<Int>{3, 5, 9, 17, 33});
}
