#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace wdms {

// Signature of a weighted decorated marked surface: genus, boundary
// components with their marked-point counts, and weighted decorations.
struct BoundaryComponent {
    std::string name;
    int marked = 0;
};

struct Decoration {
    std::string name;
    int weight = 0; // >= -1
};

struct SurfaceSpec {
    int genus = 0;
    std::vector<BoundaryComponent> boundaries;
    std::vector<Decoration> decorations;

    int total_marked() const;
    int weight_sum() const;
    std::optional<int> boundary_index(const std::string& name) const;
    std::optional<int> decoration_index(const std::string& name) const;
};

// Report-style validation: empty report == valid signature.
std::vector<std::string> validate_spec(const SurfaceSpec& spec);

// One side of a polygon: either an occurrence of an internal arc or a
// boundary segment (boundary component, segment index).
struct ArcSide {
    std::string arc;
    int occurrence = 0; // 0 = first, 1 = second
    bool operator==(const ArcSide& o) const { return arc == o.arc && occurrence == o.occurrence; }
};

struct BoundarySegmentSide {
    std::string boundary;
    int segment = 0;
    bool operator==(const BoundarySegmentSide& o) const {
        return boundary == o.boundary && segment == o.segment;
    }
};

using Side = std::variant<ArcSide, BoundarySegmentSide>;

bool side_equal(const Side& a, const Side& b);
std::string side_token(const Side& s);

// Once-decorated polygon. Sides are listed in clockwise order around the
// decoration.
struct Polygon {
    std::string decoration;
    std::vector<Side> sides;
};

// Address of one side occurrence inside the complex.
struct SideRef {
    int polygon = -1;
    int position = -1;
    bool operator==(const SideRef& o) const { return polygon == o.polygon && position == o.position; }
    bool operator<(const SideRef& o) const {
        return polygon != o.polygon ? polygon < o.polygon : position < o.position;
    }
};

// A marked point derived from corner gluing. Boundary marked points are
// linear chains of corners delimited by two boundary-segment flanks.
struct MarkedPoint {
    std::string boundary;
    int index = 0; // marked point k sits between segments k-1 and k
};

class MixedAngulation {
  public:
    SurfaceSpec spec;
    std::vector<Polygon> polygons;
    std::map<std::string, int> arc_shift; // grading shift per arc

    // Derived tables, filled by validate().
    std::map<std::string, std::array<SideRef, 2>> arc_occurrences;
    std::map<std::string, SideRef> bseg_occurrence; // key "b.k"

    std::vector<std::string> validate(); // returns problem list; caches tables
    bool is_valid() const { return validated_; }

    int arc_count() const { return static_cast<int>(arc_occurrences.size()); }
    const Polygon& polygon_of(const SideRef& r) const { return polygons[r.polygon]; }
    const Side& side_at(const SideRef& r) const { return polygons[r.polygon].sides[r.position]; }

    // Corner (p, i) lies between sides[i] and sides[i+1] of polygon p,
    // clockwise. resolve_corner returns the marked point it touches.
    MarkedPoint resolve_corner(int polygon, int corner) const;

    // The other occurrence of the arc seen at `r` (which must be an ArcSide).
    SideRef other_side(const SideRef& r) const;

    int shift_of(const std::string& arc) const;

  private:
    bool validated_ = false;
    std::map<std::pair<int, int>, MarkedPoint> corner_points_;
    std::vector<std::string> derive_marked_points();
};

bool weight_formula_check(const MixedAngulation& a);

// Weighted decorated real blow-up: singularity orders -> wDMS signature.
// Orders w >= -1 become decorations; w <= -3 become boundary components
// with |w| - 2 marked points. Order -2 is rejected.
struct BlowupError {
    std::string kind; // "UnsupportedOrder" | "DegreeMismatch"
    std::string detail;
};

std::variant<SurfaceSpec, BlowupError> real_blowup_spec(int genus, const std::vector<int>& orders);

// Deterministic constructor for a disc angulation: m marked points on one
// boundary, cells of the given weights (weights must sum to m - 2).
// Returns nullopt when no dissection exists.
std::optional<MixedAngulation> angulate_disc(int marked, const std::vector<int>& weights);

// Structural equality up to polygon order and rotation of side lists.
bool same_complex(const MixedAngulation& a, const MixedAngulation& b);

} // namespace wdms
