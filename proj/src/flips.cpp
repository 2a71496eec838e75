#include "wdms/flips.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace wdms {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Components of the polygon complex with the gluing along `cut` removed.
UnionFind cut_components(const MixedAngulation& a, const std::string& cut) {
    UnionFind uf(static_cast<int>(a.polygons.size()));
    for (const auto& [arc, occ] : a.arc_occurrences) {
        if (arc == cut) continue;
        uf.unite(occ[0].polygon, occ[1].polygon);
    }
    return uf;
}


} // namespace

bool is_monogon_arc(const MixedAngulation& a, const std::string& arc) {
    auto it = a.arc_occurrences.find(arc);
    if (it == a.arc_occurrences.end()) throw ArcError("UnknownArc", arc);
    const auto& occ = it->second;
    auto uf = cut_components(a, arc);
    if (uf.find(occ[0].polygon) == uf.find(occ[1].polygon)) return false;
    for (int side = 0; side < 2; ++side) {
        int piece = uf.find(occ[side].polygon);
        int count = 0;
        for (int p = 0; p < static_cast<int>(a.polygons.size()); ++p)
            if (uf.find(p) == piece) ++count;
        if (count == 1 && a.polygons[occ[side].polygon].sides.size() == 1) return true;
    }
    return false;
}

namespace {

// Rotated view of a polygon starting at `from`: pos(i) is the original
// position of the i-th rotated side.
struct Rotation {
    int polygon;
    int base;
    int size;
    int pos(int i) const { return (base + i) % size; }
};

Rotation rotate_to(const MixedAngulation& a, const SideRef& r) {
    return {r.polygon, r.position, static_cast<int>(a.polygons[r.polygon].sides.size())};
}

const Side& side_at(const MixedAngulation& a, const Rotation& rot, int i) {
    return a.polygons[rot.polygon].sides[rot.pos(i)];
}

struct Surgery {
    std::vector<std::pair<int, Polygon>> replacements; // polygon index -> new polygon
    std::map<SideRef, SideRef> side_map;
    bool monogon = false;
};

void map_side(Surgery& s, const MixedAngulation& a, const Rotation& rot, int i, int new_poly,
              int new_pos, Polygon& out) {
    out.sides.push_back(side_at(a, rot, i));
    s.side_map[{rot.polygon, rot.pos(i)}] = {new_poly, new_pos};
}

Surgery usual_flip_two(const MixedAngulation& a, const std::string& arc, bool forward) {
    const auto& occ = a.arc_occurrences.at(arc);
    Rotation P = rotate_to(a, occ[0]);
    Rotation Q = rotate_to(a, occ[1]);
    int na = P.size - 1, nb = Q.size - 1;
    assert(na >= 1 && nb >= 1);
    Surgery s;
    Polygon p1{a.polygons[P.polygon].decoration, {}};
    Polygon p2{a.polygons[Q.polygon].decoration, {}};
    if (forward) {
        // [gamma, q_b, p_1 .. p_{a-1}] and [gamma, p_a, q_1 .. q_{b-1}]
        p1.sides.push_back(side_at(a, P, 0));
        s.side_map[{P.polygon, P.pos(0)}] = {P.polygon, 0};
        map_side(s, a, Q, nb, P.polygon, 1, p1);
        for (int i = 1; i <= na - 1; ++i) map_side(s, a, P, i, P.polygon, i + 1, p1);
        p2.sides.push_back(side_at(a, Q, 0));
        s.side_map[{Q.polygon, Q.pos(0)}] = {Q.polygon, 0};
        map_side(s, a, P, na, Q.polygon, 1, p2);
        for (int i = 1; i <= nb - 1; ++i) map_side(s, a, Q, i, Q.polygon, i + 1, p2);
    } else {
        // [gamma, p_2 .. p_a, q_1] and [gamma, q_2 .. q_b, p_1]
        p1.sides.push_back(side_at(a, P, 0));
        s.side_map[{P.polygon, P.pos(0)}] = {P.polygon, 0};
        for (int i = 2; i <= na; ++i) map_side(s, a, P, i, P.polygon, i - 1, p1);
        map_side(s, a, Q, 1, P.polygon, na, p1);
        p2.sides.push_back(side_at(a, Q, 0));
        s.side_map[{Q.polygon, Q.pos(0)}] = {Q.polygon, 0};
        for (int i = 2; i <= nb; ++i) map_side(s, a, Q, i, Q.polygon, i - 1, p2);
        map_side(s, a, P, 1, Q.polygon, nb, p2);
    }
    s.replacements = {{P.polygon, p1}, {Q.polygon, p2}};
    return s;
}

Surgery usual_flip_self(const MixedAngulation& a, const std::string& arc, bool forward) {
    const auto& occ = a.arc_occurrences.at(arc);
    assert(occ[0].polygon == occ[1].polygon);
    Rotation R = rotate_to(a, occ[0]);
    int n = R.size;
    // gamma_2 sits at rotated index j.
    int j = -1;
    for (int i = 1; i < n; ++i)
        if (R.pos(i) == occ[1].position) j = i;
    assert(j > 0);
    int na = j - 1, nc = n - j - 1;
    assert(na >= 1 && nc >= 1 && "adjacent self-glued occurrences cannot appear in a valid complex");
    Surgery s;
    Polygon out{a.polygons[R.polygon].decoration, {}};
    int pi = R.polygon;
    auto put = [&](int rot_idx) {
        int new_pos = static_cast<int>(out.sides.size());
        out.sides.push_back(side_at(a, R, rot_idx));
        s.side_map[{pi, R.pos(rot_idx)}] = {pi, new_pos};
    };
    if (forward) {
        // [g1, r_c, p_1 .. p_{a-1}, g2, p_a, r_1 .. r_{c-1}]
        put(0);
        put(j + nc);
        for (int i = 1; i <= na - 1; ++i) put(i);
        put(j);
        put(na);
        for (int i = 1; i <= nc - 1; ++i) put(j + i);
    } else {
        // [g1, x_2 .. x_a, y_1, g2, y_2 .. y_c, x_1]
        put(0);
        for (int i = 2; i <= na; ++i) put(i);
        put(j + 1);
        put(j);
        for (int i = 2; i <= nc; ++i) put(j + i);
        put(1);
    }
    s.replacements = {{pi, out}};
    return s;
}

Surgery monogon_flip(const MixedAngulation& a, const std::string& arc, bool forward) {
    const auto& occ = a.arc_occurrences.at(arc);
    // The inner occurrence lives in the bare one-gon.
    int inner = a.polygons[occ[0].polygon].sides.size() == 1 ? 0 : 1;
    assert(a.polygons[occ[inner].polygon].sides.size() == 1);
    Rotation O = rotate_to(a, occ[1 - inner]);
    int n = O.size;
    Surgery s;
    s.monogon = true;
    Polygon out{a.polygons[O.polygon].decoration, {}};
    int pi = O.polygon;
    auto put = [&](int rot_idx) {
        int new_pos = static_cast<int>(out.sides.size());
        out.sides.push_back(side_at(a, O, rot_idx));
        s.side_map[{pi, O.pos(rot_idx)}] = {pi, new_pos};
    };
    if (forward) {
        // slide the loop one corner counterclockwise: [g, s_{n-1}, s_1 .. s_{n-2}]
        put(0);
        put(n - 1);
        for (int i = 1; i <= n - 2; ++i) put(i);
    } else {
        // [g, s_2 .. s_{n-1}, s_1]
        put(0);
        for (int i = 2; i <= n - 1; ++i) put(i);
        put(1);
    }
    s.replacements = {{pi, out}};
    return s;
}

std::pair<MixedAngulation, FlipRecord> apply_flip(const MixedAngulation& a,
                                                  const std::string& arc, bool forward) {
    if (!a.arc_occurrences.count(arc)) throw ArcError("UnknownArc", arc);
    const auto& occ = a.arc_occurrences.at(arc);
    Surgery s;
    if (is_monogon_arc(a, arc))
        s = monogon_flip(a, arc, forward);
    else if (occ[0].polygon == occ[1].polygon)
        s = usual_flip_self(a, arc, forward);
    else
        s = usual_flip_two(a, arc, forward);

    MixedAngulation out = a;
    for (auto& [idx, poly] : s.replacements) out.polygons[idx] = poly;
    out.arc_shift[arc] = out.shift_of(arc) + (forward ? 1 : -1);
    auto problems = out.validate();
    assert(problems.empty() && "flip produced an invalid complex");
    (void)problems;

    FlipRecord rec;
    rec.arc = arc;
    rec.monogon = s.monogon;
    rec.grading_shift = forward ? 1 : -1;
    for (auto& [idx, poly] : s.replacements) rec.new_polygons.push_back(poly);
    rec.side_map = std::move(s.side_map);
    return {std::move(out), std::move(rec)};
}

} // namespace

std::pair<MixedAngulation, FlipRecord> forward_flip(const MixedAngulation& a,
                                                    const std::string& arc) {
    return apply_flip(a, arc, true);
}

std::pair<MixedAngulation, FlipRecord> backward_flip(const MixedAngulation& a,
                                                     const std::string& arc) {
    return apply_flip(a, arc, false);
}

SGraph dual_sgraph(const MixedAngulation& a) {
    SGraph s;
    std::map<std::string, int> poly_of_dec;
    for (int i = 0; i < static_cast<int>(a.polygons.size()); ++i)
        poly_of_dec[a.polygons[i].decoration] = i;
    for (const auto& d : a.spec.decorations) {
        s.vertices.push_back(d.name);
        const Polygon& p = a.polygons[poly_of_dec.at(d.name)];
        std::vector<Slot>& sl = s.slots[d.name];
        for (const auto& side : p.sides) {
            Slot slot;
            if (std::holds_alternative<ArcSide>(side)) {
                const auto& as = std::get<ArcSide>(side);
                slot.is_arc = true;
                slot.arc = as.arc;
                slot.occurrence = as.occurrence;
            } else {
                const auto& bs = std::get<BoundarySegmentSide>(side);
                slot.boundary = bs.boundary;
                slot.segment = bs.segment;
            }
            sl.push_back(slot);
        }
    }
    for (const auto& [arc, occ] : a.arc_occurrences) {
        std::array<EdgeEnd, 2> ends;
        for (int k = 0; k < 2; ++k)
            ends[k] = {a.polygons[occ[k].polygon].decoration, occ[k].position};
        s.ends[arc] = ends;
        s.edge_shift[arc] = a.shift_of(arc);
    }
    return s;
}

std::vector<TwistTarget> flip_twist_targets(const MixedAngulation& a, const std::string& arc,
                                            bool forward) {
    if (!a.arc_occurrences.count(arc)) throw ArcError("UnknownArc", arc);
    const auto& occ = a.arc_occurrences.at(arc);
    bool mono = is_monogon_arc(a, arc);
    std::vector<TwistTarget> out;
    for (int k = 0; k < 2; ++k) {
        const SideRef& gside = occ[k];
        const Polygon& poly = a.polygons[gside.polygon];
        int n = static_cast<int>(poly.sides.size());
        if (n == 1) continue; // bare monogon cell, no neighbour slots
        if (mono) {
            // only the outer occurrence carries the trigger
            if (static_cast<int>(a.polygons[occ[k].polygon].sides.size()) == 1) continue;
        }
        int cand = forward ? (gside.position - 1 + n) % n : (gside.position + 1) % n;
        const Side& side = poly.sides[cand];
        if (!std::holds_alternative<ArcSide>(side)) continue; // boundary slot blocks
        const auto& as = std::get<ArcSide>(side);
        if (as.arc == arc) continue;
        out.push_back({{gside.polygon, cand}, as.arc, poly.decoration, gside});
    }
    return out;
}

SGraph sgraph_flip(const SGraph& s, const std::string& eta, bool forward) {
    if (!s.has_edge(eta)) throw ArcError("UnknownEdge", eta);
    SGraph out = s;
    // Collect triggers on the input structure first.
    struct Move {
        std::string alpha;
        int alpha_occ;
        std::string from_vertex;
        int eta_occ;
    };
    std::vector<Move> moves;
    for (int k = 0; k < 2; ++k) {
        const EdgeEnd& e = s.end_of(eta, k);
        int d = s.valency(e.vertex);
        if (d <= 1) continue;
        int cand = forward ? (e.slot - 1 + d) % d : (e.slot + 1) % d;
        const Slot& slot = s.slots.at(e.vertex)[cand];
        if (!slot.is_arc || slot.arc == eta) continue;
        moves.push_back({slot.arc, slot.occurrence, e.vertex, k});
    }
    for (const auto& m : moves) {
        // Remove alpha's end from its vertex...
        EdgeEnd old_end = out.end_of(m.alpha, m.alpha_occ);
        auto& from_slots = out.slots.at(old_end.vertex);
        from_slots.erase(from_slots.begin() + old_end.slot);
        for (auto& [edge, ends] : out.ends)
            for (auto& e : ends)
                if (e.vertex == old_end.vertex && e.slot > old_end.slot) --e.slot;
        // ...and insert it next to eta's far end: immediately clockwise after
        // for a forward flip, immediately counterclockwise before otherwise.
        EdgeEnd far = out.end_of(eta, 1 - m.eta_occ);
        int at = forward ? far.slot + 1 : far.slot;
        auto& to_slots = out.slots.at(far.vertex);
        for (auto& [edge, ends] : out.ends)
            for (auto& e : ends)
                if (e.vertex == far.vertex && e.slot >= at) ++e.slot;
        Slot ns;
        ns.is_arc = true;
        ns.arc = m.alpha;
        ns.occurrence = m.alpha_occ;
        to_slots.insert(to_slots.begin() + at, ns);
        out.ends.at(m.alpha)[m.alpha_occ] = {far.vertex, at};
    }
    out.edge_shift[eta] = out.shift(eta) + (forward ? 1 : -1);
    return out;
}

bool same_sgraph_arcs(const SGraph& x, const SGraph& y) {
    auto vs = x.vertices;
    auto ws = y.vertices;
    std::sort(vs.begin(), vs.end());
    std::sort(ws.begin(), ws.end());
    if (vs != ws) return false;
    // Edge endpoints and shifts.
    if (x.ends.size() != y.ends.size()) return false;
    for (const auto& [edge, ex] : x.ends) {
        auto it = y.ends.find(edge);
        if (it == y.ends.end()) return false;
        std::array<std::string, 2> a{ex[0].vertex, ex[1].vertex};
        std::array<std::string, 2> b{it->second[0].vertex, it->second[1].vertex};
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return false;
        if (x.shift(edge) != y.shift(edge)) return false;
    }
    // Cyclic order of arc slots per vertex.
    auto arc_cycle = [](const SGraph& g, const std::string& v) {
        std::vector<std::string> c;
        for (const auto& s : g.slots.at(v))
            if (s.is_arc) c.push_back(s.arc);
        return c;
    };
    auto min_rotation = [](std::vector<std::string> c) {
        if (c.empty()) return c;
        std::vector<std::string> best = c;
        for (size_t r = 1; r < c.size(); ++r) {
            std::rotate(c.begin(), c.begin() + 1, c.end());
            if (c < best) best = c;
        }
        return best;
    };
    for (const auto& v : vs)
        if (min_rotation(arc_cycle(x, v)) != min_rotation(arc_cycle(y, v))) return false;
    return true;
}

TrackedSGraph initial_tracked(const MixedAngulation& a) {
    TrackedSGraph t;
    t.reference = dual_sgraph(a);
    t.angulation = a;
    for (const auto& [arc, occ] : a.arc_occurrences) {
        t.words[arc] = edge_word(t.reference, arc, 0, 0);
        t.start_side[arc] = occ[0];
    }
    return t;
}

TrackedSGraph tracked_flip(const TrackedSGraph& t, const std::string& arc, bool forward) {
    auto targets = flip_twist_targets(t.angulation, arc, forward);
    auto [a2, rec] = forward ? forward_flip(t.angulation, arc) : backward_flip(t.angulation, arc);
    int sign = forward ? 1 : -1;
    int times = rec.monogon ? 2 : 1;

    TrackedSGraph out;
    out.reference = t.reference;
    out.angulation = std::move(a2);
    out.words = t.words;
    out.start_side = t.start_side;
    out.words.at(arc).grading += sign;

    const SGraph& ref = t.reference;
    for (const auto& tgt : targets) {
        const ClosedArcWord& eta = t.words.at(arc);
        ClosedArcWord alpha = out.words.at(tgt.alpha);
        bool alpha_starts_there = out.start_side.at(tgt.alpha) == tgt.alpha_side;
        if (alpha_starts_there) alpha = reverse_word(ref, alpha);
        for (int i = 0; i < times; ++i)
            alpha = twist_slide(ref, alpha, word_end_vertex(ref, alpha), eta, sign);
        if (alpha_starts_there) alpha = reverse_word(ref, alpha);
        out.words.at(tgt.alpha) = alpha;
    }
    for (auto& [name, side] : out.start_side) {
        auto it = rec.side_map.find(side);
        if (it != rec.side_map.end()) side = it->second;
    }
    return out;
}

} // namespace wdms
