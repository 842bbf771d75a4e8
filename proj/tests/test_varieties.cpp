#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include "zetaforge/variety.hpp"

using namespace zetaforge;

namespace {

VarietyPresentation affine(const std::string& name, long dim,
                           std::initializer_list<std::string> polys) {
    std::string doc = "{\"name\":\"" + name + "\",\"ambient\":{\"type\":\"affine\",\"dim\":" +
                      std::to_string(dim) + "},\"polys\":[";
    bool first = true;
    for (const auto& p : polys) {
        if (!first) doc += ",";
        doc += "\"" + p + "\"";
        first = false;
    }
    doc += "]}";
    return parse_variety(doc);
}

} // namespace

TEST_CASE("parsing the fat point and P^1") {
    VarietyPresentation fat = affine("fat", 1, {"x0^2"});
    CHECK(fat.ambient.type == Ambient::Type::Affine);
    CHECK(fat.polys.size() == 1);
    CHECK(fat.polys[0].to_string() == "x0^2");

    VarietyPresentation p1 = parse_variety(
        R"({"name":"p1","ambient":{"type":"projective","dim":1},"polys":[]})");
    CHECK(p1.ambient.coords() == 2);
    CHECK(p1.polys.empty());
    CHECK_FALSE(p1.declared_smooth.has_value());
}

TEST_CASE("nonhomogeneous polynomials are rejected under projective ambient") {
    CHECK_THROWS_WITH_AS(
        parse_variety(
            R"({"name":"bad","ambient":{"type":"projective","dim":2},"polys":["x0^2 + x1"]})"),
        doctest::Contains("nonhomogeneous"), std::invalid_argument);
    // degree-0 equations cannot cut out a projective variety either
    CHECK_THROWS_AS(
        parse_variety(
            R"({"name":"bad","ambient":{"type":"projective","dim":1},"polys":["3"]})"),
        std::invalid_argument);
}

TEST_CASE("parse error surfaces") {
    CHECK_THROWS_AS(parse_variety("{"), std::invalid_argument);
    CHECK_THROWS_AS(parse_variety(R"({"name":"v"})"), std::invalid_argument);
    CHECK_THROWS_AS(affine("v", 1, {"x1 + 1"}), std::invalid_argument); // x1 out of range
    CHECK_THROWS_AS(affine("v", 1, {"x0 +"}), std::invalid_argument);
    CHECK_THROWS_AS(affine("v", 1, {"y0"}), std::invalid_argument);
}

TEST_CASE("canonical form merges terms and orders graded-lex") {
    VarietyPresentation v = affine("v", 2, {"x1*x0 + x0*x1 + x1^2 - 1 + x0"});
    CHECK(v.polys[0].to_string() == "2*x0*x1 + x1^2 + x0 - 1");
    // zero polynomials are dropped
    VarietyPresentation w = affine("w", 1, {"x0 - x0"});
    CHECK(w.polys.empty());
}

TEST_CASE("serialization round trip is the identity on canonical presentations") {
    VarietyPresentation v = parse_variety(
        R"({"name":"curve","ambient":{"type":"affine","dim":2},"polys":["x1^2 - x0^3 - x0 - 1"],"smooth":true})");
    std::string s1 = serialize_variety(v);
    VarietyPresentation v2 = parse_variety(s1);
    CHECK(serialize_variety(v2) == s1);
    CHECK(variety_hash(v2) == variety_hash(v));
    CHECK(v2.declared_smooth == std::optional<bool>(true));
    // renaming changes the hash (content addressing covers the whole document)
    VarietyPresentation v3 = v;
    v3.name = "other";
    CHECK(variety_hash(v3) != variety_hash(v));
}

TEST_CASE("eval_poly on the spec examples") {
    // x0^2 - 2 at x0 = 3 in Z/25
    MultiPoly f = MultiPoly::parse("x0^2 - 2", 1);
    CHECK(eval_poly(f, {ZmodElem(5, 2, Int(3))}).value() == 7);

    // x0*x1 + 1 at (1,1) in F_2
    auto f2 = field_make(2, 1);
    MultiPoly g = MultiPoly::parse("x0*x1 + 1", 2);
    CHECK(eval_poly(g, {FqElem::one(f2), FqElem::one(f2)}).is_zero());

    // x0^3 + x0 + 1 at 2 in F_5
    auto f5 = field_make(5, 1);
    MultiPoly h = MultiPoly::parse("x0^3 + x0 + 1", 1);
    CHECK(eval_poly(h, {FqElem::from_int(f5, Int(2))}) == FqElem::from_int(f5, Int(1)));
}

TEST_CASE("eval_poly rejects arity mismatches and mixed rings") {
    MultiPoly f = MultiPoly::parse("x0 + x1", 2);
    CHECK_THROWS_AS(eval_poly(f, {ZmodElem(3, 1, Int(0))}), std::invalid_argument);
    CHECK_THROWS_AS(eval_poly(f, std::vector<ZmodElem>{ZmodElem(3, 1, Int(0)), ZmodElem(3, 2, Int(0))}),
                    std::invalid_argument);
    auto f2 = field_make(2, 1);
    auto f4 = field_make(2, 2);
    CHECK_THROWS_AS(eval_poly(f, std::vector<FqElem>{FqElem::one(f2), FqElem::one(f4)}),
                    std::invalid_argument);
}

TEST_CASE("evaluation is a ring homomorphism in the polynomial argument") {
    std::mt19937 rng(77);
    auto f13 = field_make(13, 1);
    std::uniform_int_distribution<long> coeff(-6, 6);
    std::uniform_int_distribution<unsigned> expo(0, 3);
    std::uniform_int_distribution<unsigned long> pt(0, 12);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<MultiPoly::Term> ta, tb;
        for (int t = 0; t < 3; ++t) {
            ta.push_back({Int(coeff(rng)), {expo(rng), expo(rng)}});
            tb.push_back({Int(coeff(rng)), {expo(rng), expo(rng)}});
        }
        MultiPoly a(2, ta), b(2, tb);
        std::vector<FqElem> point{FqElem::from_index(f13, pt(rng)), FqElem::from_index(f13, pt(rng))};
        CHECK(eval_poly(a + b, point) == eval_poly(a, point) + eval_poly(b, point));
        CHECK(eval_poly(a * b, point) == eval_poly(a, point) * eval_poly(b, point));
    }
}

TEST_CASE("homogeneous polynomials scale by lambda^deg") {
    auto f9 = field_make(3, 2);
    MultiPoly f = MultiPoly::parse("x0^3 + x0*x1^2 + 2*x1^3", 2);
    REQUIRE(f.is_homogeneous());
    std::mt19937 rng(11);
    std::uniform_int_distribution<unsigned long> el(0, 8);
    for (int trial = 0; trial < 20; ++trial) {
        FqElem lambda = FqElem::from_index(f9, 1 + el(rng) % 8); // nonzero
        std::vector<FqElem> point{FqElem::from_index(f9, el(rng)), FqElem::from_index(f9, el(rng))};
        std::vector<FqElem> scaled{lambda * point[0], lambda * point[1]};
        CHECK(eval_poly(f, scaled) == lambda.pow(Int(3)) * eval_poly(f, point));
    }
}

TEST_CASE("jacobian rank at mod-p solutions") {
    // derivative of x^2 vanishes at 0
    VarietyPresentation fat = affine("fat", 1, {"x0^2"});
    CHECK(jacobian_rank_at(fat, {ZmodElem(3, 1, Int(0))}) == 0);

    // x^2 - 2 at x = 4 mod 7: derivative 2*4 = 1 mod 7
    VarietyPresentation conic = affine("c", 1, {"x0^2 - 2"});
    CHECK(jacobian_rank_at(conic, {ZmodElem(7, 1, Int(4))}) == 1);

    // no equations: empty Jacobian has full rank trivially
    VarietyPresentation line = affine("line", 1, {});
    CHECK(jacobian_rank_at(line, {ZmodElem(5, 1, Int(2))}) == 0);

    // a non-solution is rejected
    CHECK_THROWS_AS(jacobian_rank_at(fat, {ZmodElem(3, 1, Int(1))}), std::invalid_argument);
}
