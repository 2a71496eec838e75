#pragma once

#include "wdms/surface.hpp"

#include <stdexcept>

namespace wdms::fixtures {

inline Side arc(const std::string& name, int occ) { return Side{ArcSide{name, occ}}; }
inline Side bseg(const std::string& b, int k) { return Side{BoundarySegmentSide{b, k}}; }

inline MixedAngulation checked(MixedAngulation a) {
    auto problems = a.validate();
    if (!problems.empty()) {
        std::string msg = "fixture invalid:";
        for (auto& p : problems) msg += "\n  " + p;
        throw std::runtime_error(msg);
    }
    return a;
}

// Disc with 5 marked points, fan triangulation at M0: arcs a = M0-M2,
// c = M0-M3. Side lists are clockwise around each decoration.
inline MixedAngulation pentagon() {
    MixedAngulation a;
    a.spec.genus = 0;
    a.spec.boundaries = {{"b0", 5}};
    a.spec.decorations = {{"z1", 1}, {"z2", 1}, {"z3", 1}};
    a.polygons = {
        {"z1", {arc("a", 0), bseg("b0", 1), bseg("b0", 0)}},
        {"z2", {arc("c", 0), bseg("b0", 2), arc("a", 1)}},
        {"z3", {bseg("b0", 4), bseg("b0", 3), arc("c", 1)}},
    };
    return checked(a);
}

// Disc with 2 marked points, a monogon pocket: decorations z0 (weight -1)
// inside the loop g, z1 (weight 1) outside.
inline MixedAngulation monogon() {
    MixedAngulation a;
    a.spec.genus = 0;
    a.spec.boundaries = {{"b0", 2}};
    a.spec.decorations = {{"z0", -1}, {"z1", 1}};
    a.polygons = {
        {"z0", {arc("g", 0)}},
        {"z1", {arc("g", 1), bseg("b0", 0), bseg("b0", 1)}},
    };
    return checked(a);
}

// Annulus, 2 marked points on the outer boundary b0 and 1 on the inner b1,
// three weight-1 triangles. Arcs: p = O0-I0, q = O1-I0 (left), s = O1-I0
// (right).
MixedAngulation annulus();

// Annulus with one marked point per boundary: a loop g at the outer point
// around the inner boundary, one arc x = O0-I0 inside; cells of weight 0
// (outside g) and 2 (inside).
MixedAngulation annulus11();

} // namespace wdms::fixtures
