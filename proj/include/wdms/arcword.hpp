#pragma once

#include "wdms/surface.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace wdms {

struct ArcError : std::runtime_error {
    std::string kind;
    ArcError(std::string k, const std::string& msg) : std::runtime_error(k + ": " + msg), kind(std::move(k)) {}
};

// One slot around an S-graph vertex: the dual end of a polygon side.
// Arc sides contribute edge ends, boundary segments contribute marks that
// occupy angular positions but carry no edge.
struct Slot {
    bool is_arc = false;
    std::string arc;
    int occurrence = 0;
    std::string boundary;
    int segment = 0;
};

struct EdgeEnd {
    std::string vertex;
    int slot = -1;
};

// Dual ribbon graph of a mixed-angulation: decorations as vertices, closed
// arcs as edges, clockwise slot order inherited from the polygons, integer
// grading shift per edge. Full valency of a weight-w vertex is w + 2.
struct SGraph {
    std::vector<std::string> vertices;
    std::map<std::string, std::vector<Slot>> slots;
    std::map<std::string, std::array<EdgeEnd, 2>> ends; // per edge, occurrence order
    std::map<std::string, int> edge_shift;

    int valency(const std::string& v) const { return static_cast<int>(slots.at(v).size()); }
    const EdgeEnd& end_of(const std::string& edge, int occ) const { return ends.at(edge)[occ]; }
    int shift(const std::string& edge) const {
        auto it = edge_shift.find(edge);
        return it == edge_shift.end() ? 0 : it->second;
    }
    bool has_edge(const std::string& e) const { return ends.count(e) > 0; }
    // Clockwise steps from slot i to slot j, in [0, valency).
    int steps_cw(const std::string& v, int i, int j) const;
};

// Directed traversal of an S-graph edge, from end `from_occ` to the other.
struct Letter {
    std::string edge;
    int from_occ = 0;
    bool operator==(const Letter& o) const { return edge == o.edge && from_occ == o.from_occ; }
};

inline Letter reversed(const Letter& l) { return {l.edge, 1 - l.from_occ}; }

// Reduced edge path with turns: a graded closed arc over a reference
// S-graph. Turns live at intermediate vertices; a turn of t > 0 sweeps t
// slot steps clockwise around the vertex (t < 0 counterclockwise), so
// |t| = valency is a full loop around the decoration. The grading is the
// lift offset against the first edge's reference grading at the start.
struct ClosedArcWord {
    std::string start;
    std::vector<Letter> letters;
    std::vector<int> turns; // size = letters.size() - 1
    int grading = 0;

    bool operator==(const ClosedArcWord& o) const {
        return start == o.start && letters == o.letters && turns == o.turns && grading == o.grading;
    }
    bool operator<(const ClosedArcWord& o) const;
};

// Single-edge word along `edge` from end `from_occ`, grading g.
ClosedArcWord edge_word(const SGraph& s, const std::string& edge, int from_occ = 0, int g = 0);

std::string word_end_vertex(const SGraph& s, const ClosedArcWord& w);

// Accumulated grading drift along the word (lift offset change from the
// start reference to the end reference).
int word_drift(const SGraph& s, const ClosedArcWord& w);

ClosedArcWord reverse_word(const SGraph& s, const ClosedArcWord& w);

// Cancel every (l, 0, reverse l) backtrack; returns nullopt when the word is
// contractible. Canonical: independent of elimination order.
std::optional<ClosedArcWord> reduce_word(const SGraph& s, ClosedArcWord w);

bool is_reduced(const SGraph& s, const ClosedArcWord& w);

// Word equality as arcs: reduced words equal up to global reversal.
bool same_arc(const SGraph& s, const ClosedArcWord& a, const ClosedArcWord& b);

// Canonical representative (min of the word and its reversal).
ClosedArcWord canonical_arc(const SGraph& s, const ClosedArcWord& w);

// Index between two edge ends at a common vertex: clockwise slot steps from
// end1 to end2 (plus full loops) corrected by the grading shifts.
// Both slots must be arc slots at the same vertex.
int corner_index(const SGraph& s, const EdgeEnd& end1, const EdgeEnd& end2, int loops = 0);

// Remark-style dual transfer: open-arc index d gives closed-arc index 1 - d.
inline int dual_index(int d) { return 1 - d; }

// Index between graded arc words at a common vertex z where both words are
// oriented to start at z (minimal clockwise window on the slot steps).
int word_index_at(const SGraph& s, const ClosedArcWord& a, const ClosedArcWord& b,
                  const std::string& z);

// Smoothing: alpha must end at z, beta must start at z. The recorded turn is
// the clockwise slot gap between the meeting ends; a zero gap cancels.
// Throws EndpointMismatch / DegenerateArc.
ClosedArcWord smooth(const SGraph& s, const ClosedArcWord& alpha, const ClosedArcWord& beta,
                     const std::string& z);

// One braid-twist slide of alpha's endpoint at z along eta (eta runs from z
// to its other end). sign +1 slides clockwise, -1 counterclockwise.
ClosedArcWord twist_slide(const SGraph& s, const ClosedArcWord& alpha, const std::string& z,
                          const ClosedArcWord& eta, int sign);

// Full braid twist B_eta^power: every endpoint alpha shares with eta slides
// along eta, |power| times with the sign's orientation. B_eta(eta) = eta.
ClosedArcWord braid_twist(const SGraph& s, const ClosedArcWord& eta, const ClosedArcWord& alpha,
                          int power);

std::string format_word(const ClosedArcWord& w);

} // namespace wdms
