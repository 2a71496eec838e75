#include "doctest.h"
#include "fixtures.hpp"
#include "wdms/io.hpp"

#include <filesystem>

using namespace wdms;

namespace {
std::string fixture_path(const std::string& name) {
    return std::string(WDMS_FIXTURE_DIR) + "/" + name;
}
} // namespace

TEST_CASE("pentagon fixture file parses and matches the in-memory fixture") {
    auto doc = load_wdms_file(fixture_path("pentagon.wdms"));
    auto problems = doc.angulation.validate();
    CHECK(problems.empty());
    CHECK(doc.angulation.polygons.size() == 3);
    CHECK(same_complex(doc.angulation, fixtures::pentagon()));
}

TEST_CASE("all fixture files validate") {
    for (auto name : {"pentagon.wdms", "monogon.wdms", "annulus.wdms", "annulus11.wdms"}) {
        auto doc = load_wdms_file(fixture_path(name));
        auto problems = doc.angulation.validate();
        INFO(name);
        CHECK(problems.empty());
        CHECK(weight_formula_check(doc.angulation));
    }
}

TEST_CASE("serialize/parse round trip is stable") {
    for (auto name : {"pentagon.wdms", "monogon.wdms", "annulus.wdms", "annulus11.wdms"}) {
        auto doc = load_wdms_file(fixture_path(name));
        std::string once = serialize_wdms(doc);
        auto doc2 = parse_wdms(once);
        std::string twice = serialize_wdms(doc2);
        INFO(name);
        CHECK(once == twice);
        doc2.angulation.validate();
        CHECK(same_complex(doc.angulation, doc2.angulation));
    }
}

TEST_CASE("parse errors carry line information") {
    CHECK_THROWS_AS(parse_wdms("surface genus=0\nboundary b0\n"), ParseError);
    CHECK_THROWS_AS(parse_wdms("polygon z :\n"), ParseError);
    CHECK_THROWS_AS(parse_wdms("surface genus=0\nnonsense here\n"), ParseError);
    try {
        parse_wdms("surface genus=0\nboundary b0 marked=x\n");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }
}

TEST_CASE("dangling arc is caught at build") {
    auto doc = parse_wdms("surface genus=0\n"
                          "boundary b0 marked=1\n"
                          "decoration z weight=1\n"
                          "polygon z : arc:a arc:a arc:a\n");
    auto problems = doc.angulation.validate();
    bool found = false;
    for (auto& p : problems)
        if (p.find("DanglingArc") != std::string::npos) found = true;
    CHECK(found);
}

TEST_CASE("selection block round trips") {
    auto doc = load_wdms_file(fixture_path("annulus11.wdms"));
    REQUIRE(doc.selection.size() == 1);
    CHECK(doc.selection[0] == "zm");
}
