#include "wdms/surface.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <set>
#include <sstream>

namespace wdms {

int SurfaceSpec::total_marked() const {
    int m = 0;
    for (const auto& b : boundaries) m += b.marked;
    return m;
}

int SurfaceSpec::weight_sum() const {
    int w = 0;
    for (const auto& d : decorations) w += d.weight;
    return w;
}

std::optional<int> SurfaceSpec::boundary_index(const std::string& name) const {
    for (size_t i = 0; i < boundaries.size(); ++i)
        if (boundaries[i].name == name) return static_cast<int>(i);
    return std::nullopt;
}

std::optional<int> SurfaceSpec::decoration_index(const std::string& name) const {
    for (size_t i = 0; i < decorations.size(); ++i)
        if (decorations[i].name == name) return static_cast<int>(i);
    return std::nullopt;
}

std::vector<std::string> validate_spec(const SurfaceSpec& spec) {
    std::vector<std::string> problems;
    if (spec.genus < 0) problems.push_back("negative genus");
    for (const auto& b : spec.boundaries)
        if (b.marked < 1)
            problems.push_back("boundary '" + b.name + "' has no marked point");
    if (spec.decorations.empty()) problems.push_back("empty decoration set");
    for (const auto& d : spec.decorations)
        if (d.weight < -1)
            problems.push_back("decoration '" + d.name + "' has weight < -1");
    std::set<std::string> names;
    for (const auto& b : spec.boundaries)
        if (!names.insert("b:" + b.name).second)
            problems.push_back("duplicate boundary name '" + b.name + "'");
    for (const auto& d : spec.decorations)
        if (!names.insert("d:" + d.name).second)
            problems.push_back("duplicate decoration name '" + d.name + "'");
    return problems;
}

bool side_equal(const Side& a, const Side& b) {
    if (a.index() != b.index()) return false;
    if (std::holds_alternative<ArcSide>(a))
        return std::get<ArcSide>(a) == std::get<ArcSide>(b);
    return std::get<BoundarySegmentSide>(a) == std::get<BoundarySegmentSide>(b);
}

std::string side_token(const Side& s) {
    if (std::holds_alternative<ArcSide>(s)) return "arc:" + std::get<ArcSide>(s).arc;
    const auto& b = std::get<BoundarySegmentSide>(s);
    return "bseg:" + b.boundary + "." + std::to_string(b.segment);
}

int MixedAngulation::shift_of(const std::string& arc) const {
    auto it = arc_shift.find(arc);
    return it == arc_shift.end() ? 0 : it->second;
}

SideRef MixedAngulation::other_side(const SideRef& r) const {
    const auto& s = side_at(r);
    const auto& as = std::get<ArcSide>(s);
    const auto& occ = arc_occurrences.at(as.arc);
    return occ[0] == r ? occ[1] : occ[0];
}

MarkedPoint MixedAngulation::resolve_corner(int polygon, int corner) const {
    return corner_points_.at({polygon, corner});
}

namespace {

// Corner (p,i) sits between sides[i] (pre flank) and sides[i+1] (post flank).
struct CornerWalker {
    const MixedAngulation& a;

    int size(int p) const { return static_cast<int>(a.polygons[p].sides.size()); }

    const Side& pre(std::pair<int, int> c) const { return a.polygons[c.first].sides[c.second]; }
    const Side& post(std::pair<int, int> c) const {
        int n = size(c.first);
        return a.polygons[c.first].sides[(c.second + 1) % n];
    }

    // Rotate around the marked point across the pre flank. Requires pre is arc.
    std::pair<int, int> cross_pre(std::pair<int, int> c) const {
        SideRef here{c.first, c.second};
        SideRef there = a.other_side(here);
        int n = size(there.polygon);
        return {there.polygon, (there.position - 1 + n) % n};
    }
    // Rotate across the post flank. Requires post is arc.
    std::pair<int, int> cross_post(std::pair<int, int> c) const {
        int n = size(c.first);
        SideRef here{c.first, (c.second + 1) % n};
        SideRef there = a.other_side(here);
        return {there.polygon, there.position};
    }
};

} // namespace

std::vector<std::string> MixedAngulation::derive_marked_points() {
    std::vector<std::string> problems;
    corner_points_.clear();
    CornerWalker w{*this};

    std::set<std::pair<int, int>> seen;
    std::map<std::pair<std::string, int>, int> hits; // marked point -> count

    for (int p = 0; p < static_cast<int>(polygons.size()); ++p) {
        int n = static_cast<int>(polygons[p].sides.size());
        for (int i = 0; i < n; ++i) {
            std::pair<int, int> start{p, i};
            if (seen.count(start)) continue;

            // Walk in the pre direction until a boundary flank (or loop).
            std::vector<std::pair<int, int>> chain{start};
            std::set<std::pair<int, int>> local{start};
            auto cur = start;
            bool cyclic = false;
            while (std::holds_alternative<ArcSide>(w.pre(cur))) {
                cur = w.cross_pre(cur);
                if (local.count(cur)) { cyclic = true; break; }
                local.insert(cur);
                chain.push_back(cur);
            }
            if (cyclic) {
                problems.push_back("corner orbit without boundary (interior puncture) at polygon " +
                                   polygons[p].decoration);
                for (auto& c : chain) seen.insert(c);
                continue;
            }
            auto pre_end = cur; // its pre flank is a boundary segment
            // Walk in the post direction from start.
            cur = start;
            while (std::holds_alternative<ArcSide>(w.post(cur))) {
                cur = w.cross_post(cur);
                if (local.count(cur)) { cyclic = true; break; }
                local.insert(cur);
                chain.push_back(cur);
            }
            if (cyclic) {
                problems.push_back("corner orbit without boundary (interior puncture) at polygon " +
                                   polygons[p].decoration);
                for (auto& c : chain) seen.insert(c);
                continue;
            }
            auto post_end = cur; // its post flank is a boundary segment

            const auto& pre_seg = std::get<BoundarySegmentSide>(w.pre(pre_end));
            const auto& post_seg = std::get<BoundarySegmentSide>(w.post(post_end));
            if (pre_seg.boundary != post_seg.boundary) {
                problems.push_back("corner orbit touches two boundaries: " + pre_seg.boundary +
                                   " and " + post_seg.boundary);
            } else {
                auto bi = spec.boundary_index(pre_seg.boundary);
                if (!bi) {
                    problems.push_back("unknown boundary '" + pre_seg.boundary + "'");
                } else {
                    int nb = spec.boundaries[*bi].marked;
                    if (pre_seg.segment != (post_seg.segment + 1) % nb) {
                        problems.push_back("segments " + std::to_string(post_seg.segment) + "," +
                                           std::to_string(pre_seg.segment) + " of boundary " +
                                           pre_seg.boundary + " meet out of cyclic order");
                    } else {
                        MarkedPoint mp{pre_seg.boundary, pre_seg.segment};
                        hits[{mp.boundary, mp.index}]++;
                        for (auto& c : chain) corner_points_[c] = mp;
                    }
                }
            }
            for (auto& c : chain) seen.insert(c);
        }
    }

    for (const auto& b : spec.boundaries)
        for (int k = 0; k < b.marked; ++k) {
            auto it = hits.find({b.name, k});
            int count = it == hits.end() ? 0 : it->second;
            if (count != 1)
                problems.push_back("marked point " + b.name + "." + std::to_string(k) +
                                   " derived " + std::to_string(count) + " times");
        }
    return problems;
}

std::vector<std::string> MixedAngulation::validate() {
    std::vector<std::string> problems = validate_spec(spec);
    validated_ = false;
    arc_occurrences.clear();
    bseg_occurrence.clear();

    // Decorations <-> polygons, one each.
    std::map<std::string, int> dec_use;
    for (const auto& p : polygons) dec_use[p.decoration]++;
    for (const auto& d : spec.decorations)
        if (dec_use[d.name] != 1)
            problems.push_back("decoration '" + d.name + "' used in " +
                               std::to_string(dec_use[d.name]) + " polygons");
    for (const auto& [name, cnt] : dec_use)
        if (!spec.decoration_index(name))
            problems.push_back("undeclared decoration '" + name + "'");

    // Polygon sizes.
    for (const auto& p : polygons) {
        auto di = spec.decoration_index(p.decoration);
        if (di) {
            int want = spec.decorations[*di].weight + 2;
            if (static_cast<int>(p.sides.size()) != want)
                problems.push_back("PolygonSizeMismatch: polygon '" + p.decoration + "' has " +
                                   std::to_string(p.sides.size()) + " sides, expected " +
                                   std::to_string(want));
        }
    }

    // Occurrence tables.
    std::map<std::string, std::vector<SideRef>> arc_refs;
    for (int pi = 0; pi < static_cast<int>(polygons.size()); ++pi) {
        const auto& p = polygons[pi];
        for (int si = 0; si < static_cast<int>(p.sides.size()); ++si) {
            const auto& s = p.sides[si];
            if (std::holds_alternative<ArcSide>(s)) {
                arc_refs[std::get<ArcSide>(s).arc].push_back({pi, si});
            } else {
                const auto& b = std::get<BoundarySegmentSide>(s);
                auto bi = spec.boundary_index(b.boundary);
                if (!bi) {
                    problems.push_back("undeclared boundary '" + b.boundary + "'");
                    continue;
                }
                if (b.segment < 0 || b.segment >= spec.boundaries[*bi].marked) {
                    problems.push_back("segment index out of range: " + side_token(s));
                    continue;
                }
                std::string key = b.boundary + "." + std::to_string(b.segment);
                if (bseg_occurrence.count(key))
                    problems.push_back("DuplicateBoundarySegment: " + key);
                else
                    bseg_occurrence[key] = {pi, si};
            }
        }
    }
    for (auto& [arc, refs] : arc_refs) {
        if (refs.size() != 2) {
            problems.push_back("DanglingArc: arc '" + arc + "' occurs " +
                               std::to_string(refs.size()) + " times");
        } else {
            // Occurrence order follows (polygon, position) order of
            // appearance; stored occurrence fields are renormalized so they
            // stay meaningful after surgeries rearrange sides.
            arc_occurrences[arc] = {refs[0], refs[1]};
            for (int k = 0; k < 2; ++k)
                std::get<ArcSide>(polygons[refs[k].polygon].sides[refs[k].position]).occurrence = k;
            if (!arc_shift.count(arc)) arc_shift[arc] = 0;
        }
    }
    for (const auto& b : spec.boundaries)
        for (int k = 0; k < b.marked; ++k)
            if (!bseg_occurrence.count(b.name + "." + std::to_string(k)))
                problems.push_back("missing boundary segment " + b.name + "." + std::to_string(k));

    if (!problems.empty()) return problems;

    // Euler count: F - E_int = 2 - 2g - b.
    int chi = 2 - 2 * spec.genus - static_cast<int>(spec.boundaries.size());
    int count = static_cast<int>(polygons.size()) - static_cast<int>(arc_occurrences.size());
    if (count != chi)
        problems.push_back("GluingMismatch: polygons - arcs = " + std::to_string(count) +
                           ", expected Euler count " + std::to_string(chi));

    auto orbit_problems = derive_marked_points();
    problems.insert(problems.end(), orbit_problems.begin(), orbit_problems.end());

    if (problems.empty()) validated_ = true;
    return problems;
}

bool weight_formula_check(const MixedAngulation& a) {
    int m = a.spec.total_marked();
    int b = static_cast<int>(a.spec.boundaries.size());
    int g = a.spec.genus;
    return a.spec.weight_sum() - (m + 2 * b) == 4 * g - 4;
}

std::variant<SurfaceSpec, BlowupError> real_blowup_spec(int genus, const std::vector<int>& orders) {
    int sum = 0;
    for (int w : orders) sum += w;
    if (sum != 4 * genus - 4)
        return BlowupError{"DegreeMismatch", "orders sum to " + std::to_string(sum) +
                                                 ", expected " + std::to_string(4 * genus - 4)};
    SurfaceSpec spec;
    spec.genus = genus;
    int bi = 0, di = 0;
    for (int w : orders) {
        if (w >= -1) {
            spec.decorations.push_back({"z" + std::to_string(di++), w});
        } else if (w <= -3) {
            spec.boundaries.push_back({"b" + std::to_string(bi++), -w - 2});
        } else {
            return BlowupError{"UnsupportedOrder",
                               "order -2 would give a boundary without marked points"};
        }
    }
    auto problems = validate_spec(spec);
    if (!problems.empty()) return BlowupError{"UnsupportedOrder", problems.front()};
    return spec;
}

namespace {

// Recursive dissection of disc regions into once-decorated cells. Sides are
// opaque tokens; a new chord splits off a sub-region, a chord consuming no
// region sides hangs a pocket (nested loop).
struct Dissector {
    std::string arc_prefix = "a";
    std::string dec_prefix = "w";
    std::vector<int> weights; // multiset; kUsed marks consumed entries
    std::vector<Polygon> out;
    int next_arc = 0;
    int dec_counter = 0;

    static constexpr int kUsed = -1000;

    bool all_used() const {
        for (int w : weights)
            if (w != kUsed) return false;
        return true;
    }

    // Worklist of regions still to fill; each region is a cyclic side list
    // whose first entry anchors the next cell. Full backtracking.
    bool solve(std::vector<std::vector<Side>> regions) {
        if (regions.empty()) return all_used();
        std::vector<Side> region = regions.back();
        regions.pop_back();

        for (size_t wi = 0; wi < weights.size(); ++wi) {
            int w = weights[wi];
            if (w == kUsed) continue;
            // Skip duplicate weights at the same decision level.
            bool dup = false;
            for (size_t j = 0; j < wi; ++j)
                if (weights[j] == w) { dup = true; break; }
            if (dup) continue;
            weights[wi] = kUsed;
            if (try_cell(region, w + 2, regions)) return true;
            weights[wi] = w;
        }
        return false;
    }

    // Build one cell of size s containing region[0]; the cell's remaining
    // sides alternate between consecutive region sides and fresh chords.
    bool try_cell(const std::vector<Side>& region, int s, const std::vector<std::vector<Side>>& rest) {
        int n = static_cast<int>(region.size());
        if (s < 1) return false;
        std::vector<Side> cell{region[0]};
        std::vector<std::vector<Side>> subs;

        std::function<bool(int, int)> rec = [&](int placed, int consumed) -> bool {
            if (placed == s) {
                if (consumed != n) return false;
                std::string dec = dec_prefix + std::to_string(dec_counter);
                ++dec_counter;
                out.push_back({dec, cell});
                auto work = rest;
                for (auto& sr : subs) work.push_back(sr);
                if (solve(work)) return true;
                out.pop_back();
                --dec_counter;
                return false;
            }
            if (placed > s) return false;
            // Consume the next region side directly.
            if (consumed < n) {
                cell.push_back(region[consumed]);
                if (rec(placed + 1, consumed + 1)) return true;
                cell.pop_back();
            }
            // Or insert a chord closing off the next t >= 0 region sides.
            for (int t = 0; consumed + t <= n; ++t) {
                std::string arc = arc_prefix + std::to_string(next_arc);
                ++next_arc;
                std::vector<Side> sub{Side{ArcSide{arc, 1}}};
                for (int j = 0; j < t; ++j) sub.push_back(region[consumed + j]);
                cell.push_back(Side{ArcSide{arc, 0}});
                subs.push_back(sub);
                if (rec(placed + 1, consumed + t)) return true;
                subs.pop_back();
                cell.pop_back();
                --next_arc;
            }
            return false;
        };
        return rec(1, 1);
    }
};

} // namespace

std::optional<MixedAngulation> angulate_disc(int marked, const std::vector<int>& weights) {
    int sum = 0;
    for (int w : weights) sum += w;
    if (sum != marked - 2) return std::nullopt;

    Dissector d;
    d.weights = weights;
    // Clockwise around the cells means walking the boundary in reverse.
    std::vector<Side> region;
    for (int k = marked - 1; k >= 0; --k) region.push_back(Side{BoundarySegmentSide{"b0", k}});
    if (!d.solve({region})) return std::nullopt;

    MixedAngulation a;
    a.spec.genus = 0;
    a.spec.boundaries.push_back({"b0", marked});
    for (auto& p : d.out) {
        int w = static_cast<int>(p.sides.size()) - 2;
        a.spec.decorations.push_back({p.decoration, w});
    }
    a.polygons = d.out;
    auto problems = a.validate();
    if (!problems.empty()) return std::nullopt;
    return a;
}

namespace {

std::vector<std::string> canonical_polygon(const Polygon& p) {
    int n = static_cast<int>(p.sides.size());
    std::vector<std::string> best;
    for (int r = 0; r < n; ++r) {
        std::vector<std::string> cand;
        cand.push_back(p.decoration);
        for (int i = 0; i < n; ++i) cand.push_back(side_token(p.sides[(r + i) % n]));
        if (best.empty() || cand < best) best = cand;
    }
    return best;
}

} // namespace

bool same_complex(const MixedAngulation& a, const MixedAngulation& b) {
    if (a.polygons.size() != b.polygons.size()) return false;
    std::vector<std::vector<std::string>> ca, cb;
    for (const auto& p : a.polygons) ca.push_back(canonical_polygon(p));
    for (const auto& p : b.polygons) cb.push_back(canonical_polygon(p));
    std::sort(ca.begin(), ca.end());
    std::sort(cb.begin(), cb.end());
    if (ca != cb) return false;
    for (const auto& [arc, s] : a.arc_shift) {
        auto it = b.arc_shift.find(arc);
        int sb = it == b.arc_shift.end() ? 0 : it->second;
        if (s != sb) return false;
    }
    for (const auto& [arc, s] : b.arc_shift) {
        auto it = a.arc_shift.find(arc);
        int sa = it == a.arc_shift.end() ? 0 : it->second;
        if (s != sa) return false;
    }
    return true;
}

} // namespace wdms
