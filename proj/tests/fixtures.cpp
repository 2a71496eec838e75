#include "fixtures.hpp"

namespace wdms::fixtures {

MixedAngulation annulus() {
    MixedAngulation a;
    a.spec.genus = 0;
    a.spec.boundaries = {{"b0", 2}, {"b1", 1}};
    a.spec.decorations = {{"zL", 1}, {"zR", 1}, {"zB", 1}};
    a.polygons = {
        {"zL", {arc("p", 0), arc("q", 0), bseg("b0", 0)}},
        {"zR", {arc("p", 1), bseg("b0", 1), arc("s", 0)}},
        {"zB", {arc("q", 1), bseg("b1", 0), arc("s", 1)}},
    };
    return checked(a);
}

MixedAngulation annulus11() {
    MixedAngulation a;
    a.spec.genus = 0;
    a.spec.boundaries = {{"b0", 1}, {"b1", 1}};
    a.spec.decorations = {{"zo", 0}, {"zm", 2}};
    a.polygons = {
        {"zo", {arc("g", 0), bseg("b0", 0)}},
        {"zm", {arc("g", 1), arc("x", 0), bseg("b1", 0), arc("x", 1)}},
    };
    return checked(a);
}

} // namespace wdms::fixtures
