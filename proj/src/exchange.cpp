#include "wdms/exchange.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

namespace wdms {

int ExchangeGraph::out_degree(int v) const {
    int n = 0;
    for (const auto& e : edges)
        if (e.from == v) ++n;
    return n;
}

int ExchangeGraph::in_degree(int v) const {
    int n = 0;
    for (const auto& e : edges)
        if (e.to == v) ++n;
    return n;
}

std::string tracked_key(const TrackedSGraph& t) {
    // Identity by underlying reduced words (isotopy classes of the dual
    // arcs). Gradings are excluded: the forward-flip shifts give every cycle
    // of flips a nonzero grading monodromy, so graded word sets never close
    // up, while the words themselves are what separates mapping-class
    // distinct states.
    std::vector<std::string> words;
    for (const auto& [arc, w] : t.words) {
        ClosedArcWord c = canonical_arc(t.reference, w);
        c.grading = 0;
        words.push_back(format_word(c));
    }
    std::sort(words.begin(), words.end());
    std::ostringstream out;
    for (const auto& w : words) out << w << ";";
    return out.str();
}

namespace {

// Deterministic relabeling walk seeded at one polygon side; emits weights,
// renamed side tokens and gluing structure in discovery order.
std::string seeded_key(const MixedAngulation& a, int seed_poly, int seed_pos) {
    std::map<int, std::pair<int, int>> poly_order; // polygon -> (new id, start pos)
    std::map<std::string, int> arc_names;
    std::vector<int> queue;
    poly_order[seed_poly] = {0, seed_pos};
    queue.push_back(seed_poly);
    std::ostringstream out;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        int pi = queue[qi];
        const Polygon& p = a.polygons[pi];
        int n = static_cast<int>(p.sides.size());
        int start = poly_order[pi].second;
        out << "p" << poly_order[pi].first << " w" << (n - 2) << " :";
        for (int i = 0; i < n; ++i) {
            const Side& s = p.sides[(start + i) % n];
            if (std::holds_alternative<BoundarySegmentSide>(s)) {
                const auto& b = std::get<BoundarySegmentSide>(s);
                out << " " << b.boundary << "." << b.segment;
            } else {
                const auto& as = std::get<ArcSide>(s);
                auto it = arc_names.find(as.arc);
                int id;
                if (it == arc_names.end()) {
                    id = static_cast<int>(arc_names.size());
                    arc_names[as.arc] = id;
                    SideRef other = a.other_side({pi, (start + i) % n});
                    if (!poly_order.count(other.polygon)) {
                        poly_order[other.polygon] = {static_cast<int>(poly_order.size()),
                                                     other.position};
                        queue.push_back(other.polygon);
                    }
                } else {
                    id = it->second;
                }
                out << " a" << id;
            }
        }
        out << "\n";
    }
    return out.str();
}

} // namespace

std::string canonical_complex_key(const MixedAngulation& a) {
    std::string best;
    for (int pi = 0; pi < static_cast<int>(a.polygons.size()); ++pi) {
        int n = static_cast<int>(a.polygons[pi].sides.size());
        for (int pos = 0; pos < n; ++pos) {
            std::string cand = seeded_key(a, pi, pos);
            if (best.empty() || cand < best) best = std::move(cand);
        }
    }
    return best;
}

ExchangeGraph enumerate_eg(const MixedAngulation& a0, int max_nodes, EGMode mode, int threads) {
    ExchangeGraph g;
    TrackedSGraph t0 = initial_tracked(a0);
    auto key_of = [&](const TrackedSGraph& t) {
        return mode == EGMode::tracked ? tracked_key(t) : canonical_complex_key(t.angulation);
    };
    std::map<std::string, int> index;
    g.nodes.push_back(t0);
    g.keys.push_back(key_of(t0));
    index[g.keys[0]] = 0;

    size_t next = 0;
    std::mutex mu;
    while (next < g.nodes.size()) {
        size_t frontier_end = g.nodes.size();
        // Expand one BFS layer; children merge in deterministic order
        // regardless of thread count.
        struct Expansion {
            size_t parent;
            std::string arc;
            TrackedSGraph child;
            std::string key;
        };
        std::vector<Expansion> layer;
        std::vector<size_t> worklist;
        for (size_t v = next; v < frontier_end; ++v) worklist.push_back(v);
        auto expand = [&](size_t v) {
            std::vector<Expansion> local;
            std::vector<std::string> arcs;
            for (const auto& [arc, _] : g.nodes[v].words) arcs.push_back(arc);
            std::sort(arcs.begin(), arcs.end());
            for (const auto& arc : arcs) {
                TrackedSGraph child = tracked_flip(g.nodes[v], arc, true);
                std::string k = key_of(child);
                local.push_back({v, arc, std::move(child), std::move(k)});
            }
            std::lock_guard<std::mutex> lock(mu);
            for (auto& e : local) layer.push_back(std::move(e));
        };
        if (threads <= 1) {
            for (size_t v : worklist) expand(v);
        } else {
            std::vector<std::thread> pool;
            std::atomic<size_t> cursor{0};
            for (int k = 0; k < threads; ++k)
                pool.emplace_back([&]() {
                    while (true) {
                        size_t i = cursor.fetch_add(1);
                        if (i >= worklist.size()) return;
                        expand(worklist[i]);
                    }
                });
            for (auto& th : pool) th.join();
        }
        std::sort(layer.begin(), layer.end(), [](const Expansion& x, const Expansion& y) {
            return x.parent != y.parent ? x.parent < y.parent : x.arc < y.arc;
        });
        next = frontier_end;
        for (auto& e : layer) {
            auto it = index.find(e.key);
            int to;
            if (it != index.end()) {
                to = it->second;
            } else if (static_cast<int>(g.nodes.size()) < max_nodes) {
                to = static_cast<int>(g.nodes.size());
                index[e.key] = to;
                g.nodes.push_back(std::move(e.child));
                g.keys.push_back(e.key);
            } else {
                g.truncated = true;
                continue;
            }
            g.edges.push_back({static_cast<int>(e.parent), e.arc, to});
        }
    }
    return g;
}

std::string export_dot(const ExchangeGraph& g) {
    std::ostringstream out;
    out << "digraph EG {\n";
    for (size_t i = 0; i < g.nodes.size(); ++i) out << "  n" << i << " [label=\"" << i << "\"];\n";
    for (const auto& e : g.edges)
        out << "  n" << e.from << " -> n" << e.to << " [label=\"" << e.arc << "\"];\n";
    if (g.truncated) out << "  // truncated\n";
    out << "}\n";
    return out.str();
}

std::string export_adjacency(const ExchangeGraph& g) {
    std::ostringstream out;
    for (const auto& e : g.edges) out << e.from << ": " << e.arc << " -> " << e.to << "\n";
    if (g.truncated) out << "# truncated\n";
    return out.str();
}

} // namespace wdms
