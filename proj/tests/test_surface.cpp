#include "doctest.h"
#include "fixtures.hpp"
#include "wdms/surface.hpp"

using namespace wdms;

TEST_CASE("validate_spec examples") {
    SurfaceSpec ok;
    ok.boundaries = {{"b0", 5}};
    ok.decorations = {{"z1", 1}, {"z2", 1}, {"z3", 1}};
    CHECK(validate_spec(ok).empty());

    SurfaceSpec no_marked;
    no_marked.boundaries = {{"b0", 0}};
    no_marked.decorations = {{"z", 1}};
    CHECK(!validate_spec(no_marked).empty());

    SurfaceSpec no_dec;
    no_dec.boundaries = {{"b0", 3}};
    CHECK(!validate_spec(no_dec).empty());
}

TEST_CASE("pentagon fixture validates") {
    auto a = fixtures::pentagon();
    CHECK(a.is_valid());
    CHECK(a.arc_count() == 2);
    CHECK(a.polygons.size() == 3);
    CHECK(weight_formula_check(a));
    // Euler characteristic with V = marked, E = arcs + segments, F = polygons.
    int V = a.spec.total_marked();
    int E = a.arc_count() + a.spec.total_marked();
    int F = static_cast<int>(a.polygons.size());
    CHECK(V - E + F == 2 - 2 * a.spec.genus - static_cast<int>(a.spec.boundaries.size()));
}

TEST_CASE("monogon fixture validates") {
    auto a = fixtures::monogon();
    CHECK(a.is_valid());
    CHECK(weight_formula_check(a));
    CHECK(a.arc_count() == 1);
}

TEST_CASE("annulus fixtures validate") {
    auto a = fixtures::annulus();
    CHECK(a.is_valid());
    CHECK(weight_formula_check(a));
    auto b = fixtures::annulus11();
    CHECK(b.is_valid());
    CHECK(weight_formula_check(b));
}

TEST_CASE("polygon size mismatch is reported") {
    MixedAngulation a;
    a.spec.genus = 0;
    a.spec.boundaries = {{"b0", 3}};
    a.spec.decorations = {{"z", 1}};
    a.polygons = {{"z",
                   {fixtures::bseg("b0", 0), fixtures::bseg("b0", 1), fixtures::bseg("b0", 2),
                    fixtures::arc("a", 0)}}};
    auto problems = a.validate();
    bool found = false;
    for (auto& p : problems)
        if (p.find("PolygonSizeMismatch") != std::string::npos) found = true;
    CHECK(found);
}

TEST_CASE("weight formula on an impossible signature") {
    MixedAngulation a;
    a.spec.genus = 0;
    a.spec.boundaries = {{"b0", 5}};
    a.spec.decorations = {{"z0", 2}, {"z1", 0}, {"z2", 1}, {"z3", -1}};
    CHECK(!weight_formula_check(a));
}

TEST_CASE("real blow-up dictionary") {
    auto r1 = real_blowup_spec(0, {1, 1, 1, 1, -8});
    REQUIRE(std::holds_alternative<SurfaceSpec>(r1));
    auto s1 = std::get<SurfaceSpec>(r1);
    CHECK(s1.boundaries.size() == 1);
    CHECK(s1.boundaries[0].marked == 6);
    CHECK(s1.decorations.size() == 4);

    auto r2 = real_blowup_spec(0, {-1, -3});
    REQUIRE(std::holds_alternative<SurfaceSpec>(r2));
    auto s2 = std::get<SurfaceSpec>(r2);
    CHECK(s2.decorations.size() == 1);
    CHECK(s2.decorations[0].weight == -1);
    CHECK(s2.boundaries.size() == 1);
    CHECK(s2.boundaries[0].marked == 1);

    auto r3 = real_blowup_spec(0, {0, -2, -2});
    REQUIRE(std::holds_alternative<BlowupError>(r3));
    CHECK(std::get<BlowupError>(r3).kind == "UnsupportedOrder");

    auto r4 = real_blowup_spec(0, {1, 1});
    REQUIRE(std::holds_alternative<BlowupError>(r4));
    CHECK(std::get<BlowupError>(r4).kind == "DegreeMismatch");
}

TEST_CASE("angulate_disc builds valid complexes") {
    auto pent = angulate_disc(5, {1, 1, 1});
    REQUIRE(pent.has_value());
    CHECK(pent->is_valid());
    CHECK(weight_formula_check(*pent));

    auto mono = angulate_disc(2, {-1, 1});
    REQUIRE(mono.has_value());
    CHECK(mono->is_valid());

    auto hex = angulate_disc(6, {1, 1, 1, 1});
    REQUIRE(hex.has_value());
    CHECK(weight_formula_check(*hex));

    auto big = angulate_disc(4, {2, 0, -1, 1});
    REQUIRE(big.has_value());
    CHECK(big->is_valid());

    CHECK(!angulate_disc(5, {1, 1}).has_value()); // weight sum mismatch
}

TEST_CASE("blow-up composed with angulation passes the weight formula") {
    auto r = real_blowup_spec(0, {1, 1, 1, 1, -8});
    auto spec = std::get<SurfaceSpec>(r);
    std::vector<int> weights;
    for (auto& d : spec.decorations) weights.push_back(d.weight);
    auto a = angulate_disc(spec.boundaries[0].marked, weights);
    REQUIRE(a.has_value());
    CHECK(weight_formula_check(*a));
}

TEST_CASE("same_complex is rotation and order independent") {
    auto a = fixtures::pentagon();
    auto b = a;
    std::rotate(b.polygons.begin(), b.polygons.begin() + 1, b.polygons.end());
    auto& sides = b.polygons[0].sides;
    std::rotate(sides.begin(), sides.begin() + 2, sides.end());
    CHECK(same_complex(a, b));
    b.arc_shift["a"] = 1;
    CHECK(!same_complex(a, b));
}
