#include "wdms/arcword.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace wdms {

int SGraph::steps_cw(const std::string& v, int i, int j) const {
    int d = valency(v);
    return ((j - i) % d + d) % d;
}

bool ClosedArcWord::operator<(const ClosedArcWord& o) const {
    if (start != o.start) return start < o.start;
    auto key = [](const ClosedArcWord& w) {
        std::vector<std::string> k;
        for (size_t i = 0; i < w.letters.size(); ++i) {
            k.push_back(w.letters[i].edge + (w.letters[i].from_occ ? "-" : "+"));
            if (i + 1 < w.letters.size()) k.push_back(std::to_string(w.turns[i]));
        }
        return k;
    };
    auto ka = key(*this), kb = key(o);
    if (ka != kb) return ka < kb;
    return grading < o.grading;
}

namespace {

const EdgeEnd& tail_end(const SGraph& s, const Letter& l) { return s.ends.at(l.edge)[l.from_occ]; }
const EdgeEnd& head_end(const SGraph& s, const Letter& l) {
    return s.ends.at(l.edge)[1 - l.from_occ];
}

// Lift-offset change across an intermediate passage: arrive at end `in`,
// sweep `turn` slot steps clockwise, depart at end `out`. Raw slot positions
// fix the reference lift at every end; the difference form keeps reversal
// antisymmetric and the contractible-triangle sum exact.
int passage_drift(const SGraph& s, const EdgeEnd& in, int turn, const EdgeEnd& out,
                  const std::string& edge_in, const std::string& edge_out) {
    int d = s.valency(in.vertex);
    int num = in.slot + turn - out.slot;
    assert(((num % d) + d) % d == 0 && "turn inconsistent with slot positions");
    (void)d;
    return num + s.shift(edge_in) - s.shift(edge_out);
}

} // namespace

ClosedArcWord edge_word(const SGraph& s, const std::string& edge, int from_occ, int g) {
    if (!s.has_edge(edge)) throw ArcError("UnknownArc", edge);
    ClosedArcWord w;
    w.start = s.end_of(edge, from_occ).vertex;
    w.letters = {{edge, from_occ}};
    w.grading = g;
    return w;
}

std::string word_end_vertex(const SGraph& s, const ClosedArcWord& w) {
    return head_end(s, w.letters.back()).vertex;
}

int word_drift(const SGraph& s, const ClosedArcWord& w) {
    int d = 0;
    for (size_t i = 0; i + 1 < w.letters.size(); ++i)
        d += passage_drift(s, head_end(s, w.letters[i]), w.turns[i],
                           tail_end(s, w.letters[i + 1]), w.letters[i].edge,
                           w.letters[i + 1].edge);
    return d;
}

ClosedArcWord reverse_word(const SGraph& s, const ClosedArcWord& w) {
    ClosedArcWord r;
    r.start = word_end_vertex(s, w);
    r.letters.reserve(w.letters.size());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        r.letters.push_back(reversed(*it));
    r.turns.reserve(w.turns.size());
    for (auto it = w.turns.rbegin(); it != w.turns.rend(); ++it) r.turns.push_back(-*it);
    r.grading = w.grading + word_drift(s, w);
    return r;
}

std::optional<ClosedArcWord> reduce_word(const SGraph& s, ClosedArcWord w) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i + 1 < w.letters.size(); ++i) {
            if (!(w.letters[i + 1] == reversed(w.letters[i])) || w.turns[i] != 0) continue;
            size_t n = w.letters.size();
            if (n == 2) return std::nullopt; // fully contractible
            if (i == 0) {
                // Start cancellation: the evaporating turn shifts the grading
                // baseline onto the new first edge.
                const EdgeEnd& back_at = tail_end(s, w.letters[0]);
                w.grading += passage_drift(s, back_at, w.turns[1], tail_end(s, w.letters[2]),
                                           w.letters[0].edge, w.letters[2].edge);
                w.letters.erase(w.letters.begin(), w.letters.begin() + 2);
                w.turns.erase(w.turns.begin(), w.turns.begin() + 2);
            } else if (i + 2 == n) {
                // End cancellation: drop the trailing excursion.
                w.letters.resize(n - 2);
                w.turns.resize(n - 3);
            } else {
                w.turns[i - 1] += w.turns[i + 1];
                w.letters.erase(w.letters.begin() + i, w.letters.begin() + i + 2);
                w.turns.erase(w.turns.begin() + i, w.turns.begin() + i + 2);
            }
            changed = true;
            break;
        }
    }
    return w;
}

bool is_reduced(const SGraph& s, const ClosedArcWord& w) {
    (void)s;
    for (size_t i = 0; i + 1 < w.letters.size(); ++i)
        if (w.letters[i + 1] == reversed(w.letters[i]) && w.turns[i] == 0) return false;
    return true;
}

ClosedArcWord canonical_arc(const SGraph& s, const ClosedArcWord& w) {
    ClosedArcWord r = reverse_word(s, w);
    return std::min(w, r);
}

bool same_arc(const SGraph& s, const ClosedArcWord& a, const ClosedArcWord& b) {
    return canonical_arc(s, a) == canonical_arc(s, b);
}

int corner_index(const SGraph& s, const EdgeEnd& end1, const EdgeEnd& end2, int loops) {
    if (end1.vertex != end2.vertex)
        throw ArcError("DistinctVertices", end1.vertex + " vs " + end2.vertex);
    const Slot& s1 = s.slots.at(end1.vertex)[end1.slot];
    const Slot& s2 = s.slots.at(end2.vertex)[end2.slot];
    if (!s1.is_arc || !s2.is_arc)
        throw ArcError("DistinctVertices", "corner_index needs arc slots");
    int d = s.valency(end1.vertex);
    return s.steps_cw(end1.vertex, end1.slot, end2.slot) + loops * d + s.shift(s2.arc) -
           s.shift(s1.arc);
}

int word_index_at(const SGraph& s, const ClosedArcWord& a, const ClosedArcWord& b,
                  const std::string& z) {
    auto oriented_from = [&](const ClosedArcWord& w) -> ClosedArcWord {
        if (w.start == z) return w;
        if (word_end_vertex(s, w) == z) return reverse_word(s, w);
        throw ArcError("EndpointMismatch", "word not incident to " + z);
    };
    ClosedArcWord wa = oriented_from(a);
    ClosedArcWord wb = oriented_from(b);
    const EdgeEnd& ea = tail_end(s, wa.letters.front());
    const EdgeEnd& eb = tail_end(s, wb.letters.front());
    // Raw-position lifts, matching the passage-drift gauge: only differences
    // and cyclic sums of these indices are geometrically meaningful.
    int lift_a = ea.slot + s.shift(wa.letters.front().edge) + wa.grading;
    int lift_b = eb.slot + s.shift(wb.letters.front().edge) + wb.grading;
    return lift_b - lift_a;
}

namespace {

ClosedArcWord concat_with_gap(const SGraph& s, const ClosedArcWord& alpha,
                              const ClosedArcWord& beta, int gap) {
    ClosedArcWord joined;
    joined.start = alpha.start;
    joined.letters = alpha.letters;
    joined.letters.insert(joined.letters.end(), beta.letters.begin(), beta.letters.end());
    joined.turns = alpha.turns;
    joined.turns.push_back(gap);
    joined.turns.insert(joined.turns.end(), beta.turns.begin(), beta.turns.end());
    joined.grading = alpha.grading;
    auto reduced = reduce_word(s, joined);
    if (!reduced) throw ArcError("DegenerateArc", "smoothing is contractible");
    return *reduced;
}

// Both words leave z along the same slot. True when `a` hugs the clockwise
// side of `b`: walk to the first divergence; the strand that keeps sweeping
// further clockwise is the inner one, and an arc diving into a vertex the
// other passes clockwise (negative sweep) lies on its clockwise flank.
bool strand_cw_of(const SGraph& s, const ClosedArcWord& a, const ClosedArcWord& b) {
    size_t i = 0;
    while (true) {
        bool a_more = i + 1 < a.letters.size();
        bool b_more = i + 1 < b.letters.size();
        if (!a_more && !b_more)
            throw ArcError("DegenerateArc", "strand comparison of equal words");
        if (!b_more) return a.turns[i] < 0;
        if (!a_more) return b.turns[i] > 0;
        if (a.turns[i] != b.turns[i]) return a.turns[i] > b.turns[i];
        assert(a.letters[i + 1] == b.letters[i + 1]);
        ++i;
    }
}

// The turn recorded when alpha (ending at z) continues into beta (starting
// at z): minimal clockwise gap, with bundled approaches resolved by strand
// order. sign > 0 sweeps clockwise, sign < 0 counterclockwise.
int junction_gap(const SGraph& s, const ClosedArcWord& alpha, const ClosedArcWord& beta,
                 const std::string& z, int sign) {
    const EdgeEnd& in = head_end(s, alpha.letters.back());
    const EdgeEnd& out = tail_end(s, beta.letters.front());
    int d = s.valency(z);
    int gap = s.steps_cw(z, in.slot, out.slot);
    if (gap == 0) {
        // alpha approaches along beta's first edge; pick the full loop or the
        // cancelling retraction by the side it hugs.
        bool cw = strand_cw_of(s, reverse_word(s, alpha), beta);
        if (sign > 0) return cw ? d : 0;
        return cw ? 0 : -d;
    }
    return sign > 0 ? gap : gap - d;
}

} // namespace

ClosedArcWord smooth(const SGraph& s, const ClosedArcWord& alpha, const ClosedArcWord& beta,
                     const std::string& z) {
    if (word_end_vertex(s, alpha) != z)
        throw ArcError("EndpointMismatch", "alpha does not end at " + z);
    if (beta.start != z) throw ArcError("EndpointMismatch", "beta does not start at " + z);
    const EdgeEnd& in = head_end(s, alpha.letters.back());
    const EdgeEnd& out = tail_end(s, beta.letters.front());
    int gap = s.steps_cw(z, in.slot, out.slot);
    return concat_with_gap(s, alpha, beta, gap);
}

ClosedArcWord twist_slide(const SGraph& s, const ClosedArcWord& alpha, const std::string& z,
                          const ClosedArcWord& eta, int sign) {
    // Candidate orientations of eta leaving z; a loop at z offers both, and
    // the sweep from alpha picks whichever end it reaches first.
    std::vector<ClosedArcWord> candidates;
    if (eta.start == z) candidates.push_back(eta);
    if (word_end_vertex(s, eta) == z) candidates.push_back(reverse_word(s, eta));
    if (candidates.empty()) throw ArcError("NoSharedEndpoint", "eta does not touch " + z);

    auto slide = [&](const ClosedArcWord& ending_at_z) {
        const ClosedArcWord* best = nullptr;
        int best_gap = 0;
        for (const auto& e : candidates) {
            int gap = junction_gap(s, ending_at_z, e, z, sign);
            if (!best || std::abs(gap) < std::abs(best_gap)) {
                best = &e;
                best_gap = gap;
            }
        }
        return concat_with_gap(s, ending_at_z, *best, best_gap);
    };

    if (word_end_vertex(s, alpha) == z) return slide(alpha);
    if (alpha.start == z) return reverse_word(s, slide(reverse_word(s, alpha)));
    throw ArcError("NoSharedEndpoint", "alpha does not touch " + z);
}

namespace {

// Same underlying curve, gradings ignored.
bool same_curve(const SGraph& s, const ClosedArcWord& a, const ClosedArcWord& b) {
    ClosedArcWord sa = a, ra = reverse_word(s, a), sb = b;
    sa.grading = ra.grading = sb.grading = 0;
    return sa == sb || ra == sb;
}

} // namespace

ClosedArcWord braid_twist(const SGraph& s, const ClosedArcWord& eta, const ClosedArcWord& alpha,
                          int power) {
    if (power == 0) return alpha;
    if (same_curve(s, eta, alpha)) return alpha; // the twist fixes its core arc setwise
    std::string e0 = eta.start;
    std::string e1 = word_end_vertex(s, eta);
    auto touches = [&](const std::string& v) { return v == e0 || v == e1; };
    int sign = power > 0 ? 1 : -1;
    ClosedArcWord cur = alpha;
    bool end_shared = touches(word_end_vertex(s, cur));
    bool start_shared = touches(cur.start);
    if (!end_shared && !start_shared)
        throw ArcError("NoSharedEndpoint", "arc does not meet the twist core");
    auto slide_end = [&]() { cur = twist_slide(s, cur, word_end_vertex(s, cur), eta, sign); };
    auto slide_start = [&]() {
        cur = reverse_word(s, cur);
        cur = twist_slide(s, cur, word_end_vertex(s, cur), eta, sign);
        cur = reverse_word(s, cur);
    };
    // The two endpoint slides need not commute; the inverse twist must undo
    // them in the opposite order.
    for (int step = 0; step < std::abs(power); ++step) {
        if (sign > 0) {
            if (end_shared) slide_end();
            if (start_shared) slide_start();
        } else {
            if (start_shared) slide_start();
            if (end_shared) slide_end();
        }
    }
    return cur;
}

std::string format_word(const ClosedArcWord& w) {
    std::ostringstream out;
    out << w.start << " -";
    for (size_t i = 0; i < w.letters.size(); ++i) {
        out << (w.letters[i].from_occ == 0 ? "+" : "-") << w.letters[i].edge;
        if (i + 1 < w.letters.size()) out << "(" << w.turns[i] << ")";
    }
    out << "-> @" << w.grading;
    return out.str();
}

} // namespace wdms
