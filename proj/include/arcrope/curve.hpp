#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "arcrope/vec3.hpp"

namespace arcrope {

/// Default tolerance for junction position/tangent matching. The constructions
/// in this library are analytic, so joins are exact up to rounding.
inline constexpr double kJoinTolerance = 1e-9;

struct LineSegment {
    Vec3 start;
    Vec3 end;

    double length() const { return (end - start).norm(); }
    Vec3 tangent() const { return (end - start).normalized(); }
    Vec3 point_at(double s) const { return start + tangent() * s; }
};

/// Circular arc parametrized by arclength s in [0, radius*sweep]:
///   p(s) = center + R(normal, s/radius) (start - center)
/// where R rotates counterclockwise about the unit plane normal. Storing the
/// sweep angle instead of an end point keeps major arcs unambiguous; a full
/// circle is sweep = 2*pi.
struct CircularArc {
    Vec3 center;
    Vec3 normal;  // unit
    Vec3 start;
    double sweep = 0.0;  // radians in (0, 2*pi]

    double radius() const { return (start - center).norm(); }
    double length() const { return radius() * sweep; }
    Vec3 point_at(double s) const {
        return center + rotate_about_axis(start - center, normal, s / radius());
    }
    Vec3 tangent_at(double s) const {
        const Vec3 radial = rotate_about_axis(start - center, normal, s / radius());
        return normal.cross(radial).normalized();
    }
    Vec3 end_point() const { return point_at(length()); }
};

using CurvePiece = std::variant<LineSegment, CircularArc>;

double piece_length(const CurvePiece& p);
Vec3 piece_start(const CurvePiece& p);
Vec3 piece_end(const CurvePiece& p);
Vec3 piece_start_tangent(const CurvePiece& p);
Vec3 piece_end_tangent(const CurvePiece& p);
Vec3 piece_point_at(const CurvePiece& p, double s);
Vec3 piece_tangent_at(const CurvePiece& p, double s);
CurvePiece reverse_piece(const CurvePiece& p);
CurvePiece transform_piece(const CurvePiece& p, const RigidMotion& m);
CurvePiece scale_piece(const CurvePiece& p, double factor);

/// Builds the unit-radius arc that starts at `start` with unit tangent
/// `tangent` and turns in the plane with unit normal `plane_normal`
/// (counterclockwise about it), with the given radius and sweep.
CircularArc arc_from_start_tangent(const Vec3& start, const Vec3& tangent,
                                   const Vec3& plane_normal, double radius, double sweep);

/// Chain of segments and arcs. When closed, the last piece joins back to the
/// first. Junction continuity (C^{1,1}) is a maintained invariant, checked by
/// check_continuity rather than enforced on construction.
struct PiecewiseCurve {
    std::vector<CurvePiece> pieces;
    bool closed = true;

    double length() const;
};

/// Minimum radius over the arc pieces; +infinity when the curve is all
/// segments. For piecewise arc/segment curves the infimal radius of curvature
/// is attained piecewise, so this is exact.
double infimal_radius_of_curvature(const PiecewiseCurve& c);

struct SamplePoint {
    Vec3 position;
    Vec3 tangent;    // exact unit tangent, analytic per piece
    double arclength;  // along the whole curve
};

/// Arclength-uniform samples, at least `density` per unit length, piece
/// endpoints always included. For closed curves the coincident first/last
/// point is emitted once.
std::vector<SamplePoint> sample(const PiecewiseCurve& c, double density);

struct ContinuityDefect {
    std::size_t junction;  // between pieces[junction] and pieces[junction+1 mod n]
    double position_gap;
    double tangent_gap;
};

/// Empty iff every junction (and the closure, when closed) matches in both
/// position and unit tangent within eps.
std::vector<ContinuityDefect> check_continuity(const PiecewiseCurve& c,
                                               double eps = kJoinTolerance);

PiecewiseCurve reversed(const PiecewiseCurve& c);
PiecewiseCurve transformed(const PiecewiseCurve& c, const RigidMotion& m);
PiecewiseCurve scaled(const PiecewiseCurve& c, double factor);

/// Random access by global arclength (binary search over cumulative piece
/// lengths). Arclength is taken modulo the total length for closed curves.
class CurveEvaluator {
public:
    explicit CurveEvaluator(const PiecewiseCurve& c);

    double total_length() const { return total_; }
    Vec3 point(double s) const;
    Vec3 tangent(double s) const;

private:
    std::pair<std::size_t, double> locate(double s) const;

    const PiecewiseCurve* curve_;
    std::vector<double> cumulative_;  // cumulative_[i] = length of pieces [0, i)
    double total_ = 0.0;
};

}  // namespace arcrope
