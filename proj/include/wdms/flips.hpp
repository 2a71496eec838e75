#pragma once

#include "wdms/arcword.hpp"
#include "wdms/surface.hpp"

#include <map>

namespace wdms {

struct FlipRecord {
    std::string arc;
    bool monogon = false;
    int grading_shift = 0; // +1 forward, -1 backward
    std::vector<Polygon> new_polygons;
    // Where each side of a rebuilt polygon went; sides of untouched polygons
    // map identically and are omitted.
    std::map<SideRef, SideRef> side_map;
};

// True iff cutting along the arc leaves a piece that is the bare monogon
// cell (a disc carrying nothing but the weight -1 one-gon), so no other arc
// cuts the angle inside it.
bool is_monogon_arc(const MixedAngulation& a, const std::string& arc);

std::pair<MixedAngulation, FlipRecord> forward_flip(const MixedAngulation& a,
                                                    const std::string& arc);
std::pair<MixedAngulation, FlipRecord> backward_flip(const MixedAngulation& a,
                                                     const std::string& arc);

// Dual S-graph: one vertex per decoration, one edge per arc, clockwise slot
// order = the polygon's side order, edge shifts = arc shifts.
SGraph dual_sgraph(const MixedAngulation& a);

// Arcs hit by the index-1 trigger of a flip at `arc`: the slot one clockwise
// step before the dual end (going counterclockwise from eta) when that slot
// is an arc. Boundary slots block the trigger.
struct TwistTarget {
    SideRef alpha_side; // the triggered occurrence, pre-flip coordinates
    std::string alpha;
    std::string vertex;    // decoration where the trigger fires
    SideRef eta_side;      // gamma's occurrence in that polygon
};
std::vector<TwistTarget> flip_twist_targets(const MixedAngulation& a, const std::string& arc,
                                            bool forward);

// S-graph flip as a one-shot combinatorial rewiring per the twist rule:
// eta keeps its ends and gains +1 (forward), each triggered edge end moves
// to eta's far endpoint, inserted immediately clockwise after eta. Boundary
// slots keep their stale positions, so iterate via TrackedSGraph instead.
SGraph sgraph_flip(const SGraph& s, const std::string& eta, bool forward);

// Structural equality of the closed-arc part: same vertices, same edge
// endpoints and shifts, same cyclic order of arc slots at every vertex.
bool same_sgraph_arcs(const SGraph& x, const SGraph& y);

// An angulation together with its dual arcs written as words over a fixed
// reference S-graph; flips update the words by the braid-twist rule.
struct TrackedSGraph {
    SGraph reference;
    MixedAngulation angulation;
    std::map<std::string, ClosedArcWord> words;
    std::map<std::string, SideRef> start_side; // occurrence at each word's start
};

TrackedSGraph initial_tracked(const MixedAngulation& a);

TrackedSGraph tracked_flip(const TrackedSGraph& t, const std::string& arc, bool forward);

} // namespace wdms
