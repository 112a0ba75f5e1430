#pragma once

#include <cstddef>

#include "arcrope/curve.hpp"

namespace arcrope {

struct ChordWitness {
    double s = 0.0;  // arclength parameters of the chord endpoints
    double t = 0.0;
    Vec3 p_s;
    Vec3 p_t;
};

struct DcsdResult {
    double dcsd = 0.0;
    ChordWitness witness;
    bool critical_found = false;  // false: no chord met the criticality tolerance,
                                  // value is the minimum over near-critical pairs
    std::size_t samples_used = 0;
};

/// Shortest doubly-critical self-distance: the length of the shortest chord
/// perpendicular to the tangent at both endpoints. Samples the curve at
/// `density` points per unit length, locates sign changes of both criticality
/// residuals f = T(s).(c(t)-c(s)) and g = T(t).(c(t)-c(s)) over the sample
/// grid, and polishes each candidate cell with coordinate-wise golden-section
/// refinement. Pairs closer than 8/density along the curve are excluded;
/// embedded thick curves have no critical chords at such short separations.
///
/// Throws "curve_not_closed" for open curves.
DcsdResult dcsd_estimate(const PiecewiseCurve& c, double density = 100.0,
                         int refine_iters = 40);

struct ThicknessReport {
    double min_radius = 0.0;  // +infinity for all-segment curves
    double dcsd = 0.0;
    double thickness = 0.0;  // min(min_radius, dcsd / 2)
    ChordWitness witness;
    std::size_t samples_used = 0;
    double tolerance = 0.0;  // criticality acceptance, relative to chord length
    bool critical_found = false;
};

ThicknessReport thickness_report(const PiecewiseCurve& c, double density = 100.0,
                                 int refine_iters = 40);

/// Minimum circumradius over all sampled point triples: an independent
/// estimator of thickness via the global radius of curvature. O(n^3) in the
/// sample count; intended for cross-checks on small curves.
double triple_circumradius_check(const PiecewiseCurve& c, double density);

/// Cheap necessary condition for unit thickness, used as a surgery sanity
/// check: every sampled pair must satisfy the chord-arc bound
/// |c(s)-c(t)| >= 2 sin(min(sep, pi)/2) * (1 - slack). Returns true when some
/// pair violates it, i.e. the unit tubes would interpenetrate.
bool tube_overlap_suspected(const PiecewiseCurve& c, double density = 8.0,
                            double slack = 0.1);

}  // namespace arcrope
