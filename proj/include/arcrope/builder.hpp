#pragma once

#include <vector>

#include "arcrope/arcpres.hpp"
#include "arcrope/curve.hpp"

namespace arcrope {

/// Geometry of the right regular prism that realizes the binding of an
/// arc-presentation. Faces have width `side` = 2 (one tube diameter); face k
/// hosts the arc on the k-th page in increasing angle order, re-spaced to the
/// uniform angle 2*pi*k/alpha (only the cyclic page order matters). Floor j
/// spans z in [2(j-1), 2j]; arcs attach at the mid-floor height 2j-1.
struct PrismLayout {
    int alpha = 0;
    double side = 2.0;
    double apothem = 0.0;  // cot(pi/alpha) for side length 2
    double floor_height = 2.0;
    double total_height = 0.0;
    std::vector<Vec3> face_directions;  // outward unit normals, page order
    std::vector<int> face_arc;          // arc index hosted on face k
    std::vector<int> arc_face;          // face index hosting arc i

    /// Midpoint of face k's outer edge line at height z.
    Vec3 face_point(int face, double z) const {
        return face_directions[face] * apothem + Vec3{0, 0, z};
    }
    double mid_floor_z(int level) const { return 2.0 * level - 1.0; }
};

PrismLayout layout(const ArcPresentation& a);  // throws "alpha_too_small" for alpha < 3

/// Length bound realized by the construction:
///   2*alpha/tan(pi/alpha) + (pi-2)*alpha + 2*skip.
double ropelength_bound(int alpha, long long skip);

/// One fin: the external handle realizing a single arc. Two unit quarter-
/// circles joined by a vertical segment of length 2|x-y| - 2 (omitted when
/// the levels are adjacent). Pieces run from level x to level y.
struct FinPart {
    int arc_index = 0;
    int face = 0;
    std::vector<CurvePiece> pieces;
    double length = 0.0;  // pi - 2 + 2|x-y|
};

/// One binding arc: the in-prism connection on floor `level` between the two
/// faces whose arcs meet at that level. A circular arc of radius
/// apothem*tan(delta/2) (delta = face angle), or a straight diameter when the
/// faces are opposite.
struct BindingPart {
    int level = 0;
    int face_a = 0;
    int face_b = 0;
    CurvePiece piece;
    double length = 0.0;
};

struct BuildResult {
    PrismLayout prism;
    std::vector<FinPart> fins;          // one per arc, presentation order
    std::vector<BindingPart> bindings;  // one per level, ascending
    std::vector<PiecewiseCurve> components;

    double total_length() const;

    /// The single closed curve; throws if the presentation was a multi-
    /// component link.
    const PiecewiseCurve& curve() const;
};

/// Realizes the presentation as a closed unit-thickness curve (one per link
/// component). Every arc piece has radius >= 1, all junctions are tangent-
/// matched, and total length obeys ropelength_bound(alpha, skip).
BuildResult build(const ArcPresentation& a);

}  // namespace arcrope
