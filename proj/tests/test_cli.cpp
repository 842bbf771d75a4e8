#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <unistd.h>

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args, const std::string& env = "") {
    std::string cmd = env + " " + std::string(ZETAFORGE_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

struct Workspace {
    fs::path dir;
    Workspace() {
        dir = fs::temp_directory_path() / ("zf-cli-" + std::to_string(::getpid()));
        fs::create_directories(dir);
        write("p1.json", R"({"name":"p1","ambient":{"type":"projective","dim":1},"polys":[]})");
        write("fat.json", R"({"name":"fat","ambient":{"type":"affine","dim":1},"polys":["x0^2"]})");
        write("ec.json",
              R"({"name":"ec5","ambient":{"type":"projective","dim":2},"polys":["x1^2*x2 - x0^3 - x0*x2^2 - x2^3"]})");
        write("ecaff.json",
              R"({"name":"ecaff","ambient":{"type":"affine","dim":2},"polys":["x1^2 - x0^3 - x0 - 1"]})");
        write("twopts.json",
              R"({"name":"twopts","ambient":{"type":"affine","dim":1},"polys":["x0^2 - x0"]})");
        write("cover3.json",
              R"({"c_order":1,"group_order":3,"normalizer_order":3,"classes":{"1":"L - 1"}})");
    }
    ~Workspace() { fs::remove_all(dir); }
    void write(const std::string& name, const std::string& text) {
        std::ofstream((dir / name).string()) << text;
    }
    std::string file(const std::string& name) const { return (dir / name).string(); }
};

Workspace& ws() {
    static Workspace w;
    return w;
}

} // namespace

TEST_CASE("count subcommand matches the worked examples") {
    auto weil = run("count --variety " + ws().file("p1.json") + " --kind weil --p 3 --m 1 --n 1");
    CHECK(weil.exit_code == 0);
    CHECK(weil.out == "4\n");

    auto igusa = run("count --variety " + ws().file("fat.json") + " --kind igusa --p 3 --n 1");
    CHECK(igusa.exit_code == 0);
    CHECK(igusa.out == "3\n");

    auto serre = run("count --variety " + ws().file("fat.json") + " --kind serre --p 3 --n 1");
    CHECK(serre.exit_code == 0);
    CHECK(serre.out == "1\n");
}

TEST_CASE("zeta report for P^1 over F_2") {
    auto r = run("zeta --variety " + ws().file("p1.json") + " --p 2 --order 6");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("ratfn: (1) / (1 - 3*T + 2*T^2)") != std::string::npos);
    CHECK(r.out.find("shape: (0,1) (1,1)") != std::string::npos);
    CHECK(r.out.find("guard: 3") != std::string::npos);
}

TEST_CASE("igusa and serre reports for the fat point") {
    auto qi = run("igusa --variety " + ws().file("fat.json") + " --p 3");
    CHECK(qi.exit_code == 0);
    CHECK(qi.out.find("ratfn: (1 + 3*T) / (1 - 3*T^2)") != std::string::npos);
    CHECK(qi.out.find("shape: (1,2)") != std::string::npos);

    auto ps = run("serre --variety " + ws().file("fat.json") + " --p 3");
    CHECK(ps.exit_code == 0);
    CHECK(ps.out.find("ratfn: (1) / (1 - T)") != std::string::npos);
    CHECK(ps.out.find("shape: (0,1)") != std::string::npos);
}

TEST_CASE("kapranov verdicts") {
    auto p1 = run("kapranov --variety " + ws().file("p1.json") + " --q 3 --order 6");
    CHECK(p1.exit_code == 0);
    CHECK(p1.out.find("curve: genus 0") != std::string::npos);
    CHECK(p1.out.find("functional_equation: holds") != std::string::npos);

    auto ec = run("kapranov --variety " + ws().file("ec.json") + " --q 5 --order 3");
    CHECK(ec.exit_code == 0);
    CHECK(ec.out.find("ratfn: (1 + 3*T + 5*T^2) / (1 - 6*T + 5*T^2)") != std::string::npos);
    CHECK(ec.out.find("curve: genus 1") != std::string::npos);
    CHECK(ec.out.find("functional_equation: holds") != std::string::npos);

    // a zero-dimensional variety has denominator (1-T)^2
    auto two = run("kapranov --variety " + ws().file("twopts.json") + " --q 2 --order 6");
    CHECK(two.exit_code == 2);
    CHECK(two.out.find("curve: mismatch") != std::string::npos);
}

TEST_CASE("groth evaluations") {
    auto g = run("groth --cover " + ws().file("cover3.json") +
                 " --spec count:7 --spec euler --spec hodge");
    CHECK(g.exit_code == 0);
    CHECK(g.out.find("result = 1/3*L - 1/3") != std::string::npos);
    CHECK(g.out.find("count:7 = 2") != std::string::npos);
    CHECK(g.out.find("euler = 0") != std::string::npos);
    CHECK(g.out.find("hodge = 1/3*u*v - 1/3") != std::string::npos);

    auto e = run("groth --element \"(L-1)*(L+1)\" --spec count:4 --spec euler");
    CHECK(e.exit_code == 0);
    CHECK(e.out.find("result = L^2 - 1") != std::string::npos);
    CHECK(e.out.find("count:4 = 15") != std::string::npos);
    CHECK(e.out.find("euler = 0") != std::string::npos);

    // unassigned symbol under a specialization is an input error
    auto bad = run("groth --element \"'Y' + L\" --spec euler");
    CHECK(bad.exit_code == 4);
}

TEST_CASE("exit codes separate negatives, resource limits and input errors") {
    // the affine curve zeta over F_3 is (1 + 3T^2)/(1 - 3T), which needs a
    // length-3 recurrence window: too few coefficients at order 6, found at 8
    auto nf = run("zeta --variety " + ws().file("ecaff.json") + " --p 3 --order 6");
    CHECK(nf.exit_code == 2);
    CHECK(nf.out.find("ratfn: not found") != std::string::npos);
    auto found = run("zeta --variety " + ws().file("ecaff.json") + " --p 3 --order 8");
    CHECK(found.exit_code == 0);
    CHECK(found.out.find("ratfn: (1 + 3*T^2) / (1 - 3*T)") != std::string::npos);

    auto budget = run("count --variety " + ws().file("p1.json") +
                      " --kind weil --p 5 --m 1 --n 6 --budget 1000");
    CHECK(budget.exit_code == 3);

    auto unstable = run("count --variety " + ws().file("fat.json") + " --kind serre --p 2 --n 12");
    CHECK(unstable.exit_code == 3);

    auto missing = run("count --variety /nonexistent.json --kind weil --p 3 --n 1");
    CHECK(missing.exit_code == 4);

    auto badflag = run("count --p 3 --n 1");
    CHECK(badflag.exit_code == 4);
}

TEST_CASE("json output round trips its numeric fields") {
    auto r = run("igusa --variety " + ws().file("fat.json") + " --p 3 --order 6 --output json");
    CHECK(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["command"] == "igusa");
    CHECK(j["p"].get<std::string>() == "3");
    CHECK(j["series"].size() == 7);
    CHECK(j["series"][1]["num"].get<std::string>() == "3");
    CHECK(j["series"][5]["num"].get<std::string>() == "27");
    CHECK(j["ratfn"]["found"].get<bool>());
    CHECK(j["ratfn"]["numer"] == std::vector<std::string>{"1", "3"});
    CHECK(j["ratfn"]["denom"] == std::vector<std::string>{"1", "0", "-3"});
    CHECK(j["shape"]["pairs"][0]["a"].get<std::string>() == "1");
    CHECK(j["shape"]["pairs"][0]["b"].get<std::string>() == "2");
    // serializing the parsed document and reparsing preserves every field
    nlohmann::json j2 = nlohmann::json::parse(j.dump());
    CHECK(j2 == j);

    auto k = run("kapranov --variety " + ws().file("ec.json") + " --q 5 --order 3 --output json");
    nlohmann::json jk = nlohmann::json::parse(k.out);
    CHECK(jk["sym_counts"] == std::vector<std::string>{"1", "9", "54", "279"});
    CHECK(jk["curve"]["genus"].get<std::string>() == "1");
    CHECK(jk["functional_equation"]["holds"].get<bool>());
}

TEST_CASE("primary output is byte-identical across worker counts") {
    std::string base = "igusa --variety " + ws().file("fat.json") + " --p 3 --order 8 --workers ";
    auto w1 = run(base + "1");
    auto w2 = run(base + "2");
    auto w7 = run(base + "7");
    CHECK(w1.exit_code == 0);
    CHECK(w1.out == w2.out);
    CHECK(w1.out == w7.out);

    std::string zeta = "zeta --variety " + ws().file("p1.json") + " --p 3 --order 5 --workers ";
    auto z1 = run(zeta + "1");
    auto z7 = run(zeta + "7");
    CHECK(z1.out == z7.out);
}

TEST_CASE("cache warm runs and the environment override") {
    fs::path cache = ws().dir / "cachedir";
    std::string env = "ZETAFORGE_CACHE=" + cache.string();
    std::string cmd = "serre --variety " + ws().file("fat.json") + " --p 3 --order 5";
    auto cold = run(cmd, env);
    CHECK(cold.exit_code == 0);
    CHECK(fs::exists(cache));
    int files = 0;
    for (const auto& e : fs::directory_iterator(cache)) {
        ++files;
        (void)e;
    }
    CHECK(files == 2); // serre records plus the igusa byproducts
    auto warm = run(cmd, env);
    CHECK(warm.out == cold.out);
    auto nocache = run(cmd);
    CHECK(nocache.out == cold.out);

    // the environment variable beats --cache-dir
    fs::path envdir = ws().dir / "envdir";
    fs::path flagdir = ws().dir / "flagdir";
    auto both = run(cmd + " --cache-dir " + flagdir.string(),
                    "ZETAFORGE_CACHE=" + envdir.string());
    CHECK(both.out == cold.out);
    CHECK(fs::exists(envdir));
    CHECK_FALSE(fs::exists(flagdir));
}
