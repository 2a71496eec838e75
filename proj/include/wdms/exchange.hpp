#pragma once

#include "wdms/flips.hpp"

#include <string>
#include <vector>

namespace wdms {

enum class EGMode { tracked, canonical };

// Oriented exchange graph grown by breadth-first forward flips from an
// initial angulation. Tracked mode identifies states by their dual
// closed-arc words over the initial S-graph (isotopy-faithful); canonical
// mode by the relabeling-minimal serialization of the complex (a quotient
// view, exact on discs).
struct ExchangeGraph {
    struct Edge {
        int from;
        std::string arc;
        int to;
    };
    std::vector<TrackedSGraph> nodes; // BFS order
    std::vector<std::string> keys;
    std::vector<Edge> edges;
    bool truncated = false;

    int out_degree(int v) const;
    int in_degree(int v) const;
};

// State keys.
std::string tracked_key(const TrackedSGraph& t);
// Lexicographically minimal serialization over relabelings of arcs and
// decorations; boundary labels stay fixed. Grading shifts are not part of
// the key (the quotient view forgets them).
std::string canonical_complex_key(const MixedAngulation& a);

ExchangeGraph enumerate_eg(const MixedAngulation& a0, int max_nodes, EGMode mode,
                           int threads = 1);

std::string export_dot(const ExchangeGraph& g);

// Adjacency listing, one `vertex: arc -> vertex` line per edge.
std::string export_adjacency(const ExchangeGraph& g);

} // namespace wdms
