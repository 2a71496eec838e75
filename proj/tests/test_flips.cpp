#include "doctest.h"
#include "fixtures.hpp"
#include "wdms/flips.hpp"

#include <random>

using namespace wdms;
using namespace wdms::fixtures;

namespace {

std::vector<std::string> arc_names(const MixedAngulation& a) {
    std::vector<std::string> names;
    for (auto& [arc, _] : a.arc_occurrences) names.push_back(arc);
    return names;
}

std::vector<MixedAngulation> all_fixtures() {
    return {pentagon(), monogon(), annulus(), annulus11()};
}

} // namespace

TEST_CASE("monogon detection") {
    CHECK(!is_monogon_arc(pentagon(), "a"));
    CHECK(!is_monogon_arc(pentagon(), "c"));
    CHECK(is_monogon_arc(monogon(), "g"));
    // the annulus11 loop bounds an annular region with a boundary inside
    CHECK(!is_monogon_arc(annulus11(), "g"));
    CHECK(!is_monogon_arc(annulus11(), "x"));
    CHECK_THROWS_AS(is_monogon_arc(pentagon(), "nope"), ArcError);
}

TEST_CASE("pentagon forward flip reaches the other quad triangulation") {
    auto a = pentagon();
    auto [flipped, rec] = forward_flip(a, "a");
    CHECK(!rec.monogon);
    CHECK(rec.grading_shift == 1);

    MixedAngulation expect;
    expect.spec = a.spec;
    expect.arc_shift = {{"a", 1}, {"c", 0}};
    expect.polygons = {
        {"z1", {arc("a", 0), bseg("b0", 2), bseg("b0", 1)}},
        {"z2", {arc("a", 1), bseg("b0", 0), arc("c", 0)}},
        {"z3", {bseg("b0", 4), bseg("b0", 3), arc("c", 1)}},
    };
    REQUIRE(expect.validate().empty());
    CHECK(same_complex(flipped, expect));
    CHECK(weight_formula_check(flipped));
}

TEST_CASE("flip locality: untouched polygons are bit-identical") {
    auto a = pentagon();
    auto [flipped, rec] = forward_flip(a, "a");
    (void)rec;
    // z3's polygon is not adjacent to arc a
    bool found = false;
    for (const auto& p : flipped.polygons)
        if (p.decoration == "z3") {
            found = true;
            REQUIRE(p.sides.size() == 3);
            CHECK(side_token(p.sides[0]) == "bseg:b0.4");
            CHECK(side_token(p.sides[1]) == "bseg:b0.3");
            CHECK(side_token(p.sides[2]) == "arc:c");
        }
    CHECK(found);
}

TEST_CASE("backward after forward is the identity everywhere") {
    for (const auto& a : all_fixtures()) {
        for (const auto& name : arc_names(a)) {
            auto [f, r1] = forward_flip(a, name);
            auto [back, r2] = backward_flip(f, name);
            INFO("arc " << name);
            CHECK(same_complex(back, a));
            auto [b2, r3] = backward_flip(a, name);
            auto [fb, r4] = forward_flip(b2, name);
            CHECK(same_complex(fb, a));
        }
    }
}

TEST_CASE("monogon fixture flip moves the loop to the other marked point") {
    auto a = monogon();
    auto [f, rec] = forward_flip(a, "g");
    CHECK(rec.monogon);
    MixedAngulation expect;
    expect.spec = a.spec;
    expect.arc_shift = {{"g", 1}};
    expect.polygons = {
        {"z0", {arc("g", 0)}},
        {"z1", {arc("g", 1), bseg("b0", 1), bseg("b0", 0)}},
    };
    REQUIRE(expect.validate().empty());
    CHECK(same_complex(f, expect));
    // double forward then double backward restores the original gradings
    auto [f2, r2] = forward_flip(f, "g");
    auto [b1, r3] = backward_flip(f2, "g");
    auto [b2, r4] = backward_flip(b1, "g");
    CHECK(same_complex(b2, a));
}

TEST_CASE("every arc admits forward and backward flips (m,m)-regularity") {
    for (const auto& a : all_fixtures()) {
        for (const auto& name : arc_names(a)) {
            CHECK_NOTHROW(forward_flip(a, name));
            CHECK_NOTHROW(backward_flip(a, name));
        }
    }
    CHECK_THROWS_AS(forward_flip(pentagon(), "zz"), ArcError);
}

TEST_CASE("weight formula is preserved by random flip walks") {
    std::mt19937 rng(99);
    for (const auto& start : all_fixtures()) {
        MixedAngulation a = start;
        for (int step = 0; step < 40; ++step) {
            auto names = arc_names(a);
            std::uniform_int_distribution<int> pick(0, static_cast<int>(names.size()) - 1);
            std::uniform_int_distribution<int> coin(0, 1);
            const auto& arc = names[pick(rng)];
            a = coin(rng) ? forward_flip(a, arc).first : backward_flip(a, arc).first;
            CHECK(weight_formula_check(a));
            CHECK(a.is_valid());
        }
    }
}

TEST_CASE("dual S-graph shapes") {
    auto pent_dual = dual_sgraph(pentagon());
    CHECK(pent_dual.vertices.size() == 3);
    CHECK(pent_dual.ends.size() == 2);
    CHECK(pent_dual.end_of("a", 0).vertex == "z1");
    CHECK(pent_dual.end_of("a", 1).vertex == "z2");
    CHECK(pent_dual.end_of("c", 0).vertex == "z2");
    CHECK(pent_dual.end_of("c", 1).vertex == "z3");

    auto mono_dual = dual_sgraph(monogon());
    CHECK(mono_dual.valency("z0") == 1); // weight -1: valency w + 2 = 1
    CHECK(mono_dual.valency("z1") == 3);

    // valency = weight + 2 everywhere
    for (const auto& a : all_fixtures()) {
        SGraph s = dual_sgraph(a);
        for (const auto& d : a.spec.decorations) CHECK(s.valency(d.name) == d.weight + 2);
    }
}

TEST_CASE("duality commutation: dual of flip equals S-graph flip of dual") {
    std::mt19937 rng(2024);
    for (const auto& start : all_fixtures()) {
        MixedAngulation a = start;
        for (int step = 0; step < 25; ++step) {
            auto names = arc_names(a);
            std::uniform_int_distribution<int> pick(0, static_cast<int>(names.size()) - 1);
            std::uniform_int_distribution<int> coin(0, 1);
            const auto& arc = names[pick(rng)];
            bool fwd = coin(rng) == 1;
            SGraph predicted = sgraph_flip(dual_sgraph(a), arc, fwd);
            a = (fwd ? forward_flip(a, arc) : backward_flip(a, arc)).first;
            SGraph actual = dual_sgraph(a);
            INFO("arc " << arc << " fwd " << fwd << " step " << step);
            CHECK(same_sgraph_arcs(predicted, actual));
        }
    }
}

TEST_CASE("monogon dual flip has no neighbours to twist") {
    auto a = monogon();
    auto targets = flip_twist_targets(a, "g", true);
    CHECK(targets.empty());
    SGraph before = dual_sgraph(a);
    SGraph after = sgraph_flip(before, "g", true);
    CHECK(after.shift("g") == 1);
    CHECK(same_sgraph_arcs(after, dual_sgraph(forward_flip(a, "g").first)));
}

TEST_CASE("tracked words stay coherent with the dual through flip walks") {
    std::mt19937 rng(5150);
    for (const auto& start : all_fixtures()) {
        TrackedSGraph t = initial_tracked(start);
        for (int step = 0; step < 20; ++step) {
            auto names = arc_names(t.angulation);
            std::uniform_int_distribution<int> pick(0, static_cast<int>(names.size()) - 1);
            std::uniform_int_distribution<int> coin(0, 1);
            const auto& arc = names[pick(rng)];
            bool fwd = coin(rng) == 1;
            t = tracked_flip(t, arc, fwd);
            SGraph actual = dual_sgraph(t.angulation);
            for (const auto& [name, w] : t.words) {
                INFO("fixture arc " << name << " step " << step);
                CHECK(is_reduced(t.reference, w));
                std::array<std::string, 2> we{w.start, word_end_vertex(t.reference, w)};
                std::array<std::string, 2> de{actual.end_of(name, 0).vertex,
                                              actual.end_of(name, 1).vertex};
                std::sort(we.begin(), we.end());
                std::sort(de.begin(), de.end());
                CHECK(we == de);
            }
        }
    }
}

TEST_CASE("tracked flip round trip restores the words") {
    for (const auto& start : all_fixtures()) {
        TrackedSGraph t = initial_tracked(start);
        for (const auto& name : arc_names(start)) {
            TrackedSGraph f = tracked_flip(t, name, true);
            TrackedSGraph back = tracked_flip(f, name, false);
            INFO("arc " << name);
            CHECK(same_complex(back.angulation, t.angulation));
            for (const auto& [arc, w] : t.words) {
                CHECK(canonical_arc(t.reference, back.words.at(arc)) ==
                      canonical_arc(t.reference, w));
            }
        }
    }
}
