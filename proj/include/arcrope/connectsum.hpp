#pragma once

#include "arcrope/curve.hpp"

namespace arcrope {

enum class ExtremeFloor { Top, Bottom };

/// Rebuilds the designated extreme floor of a built curve with a straight
/// horizontal segment: the floor's binding arc is removed and the two
/// adjacent fin quarter-circles are swiveled about their vertical junction
/// axes so their horizontal end tangents line up with the new segment. Length
/// never increases, thickness and knot type are preserved, and the operation
/// is idempotent. Throws "not_builder_output" when the floor structure is not
/// recognized.
PiecewiseCurve straighten_extreme_floor(const PiecewiseCurve& c, ExtremeFloor which);

enum class JoinCase { Flat, Bitangent };

struct JoinPlan {
    double l1 = 0.0;  // straight-segment length of the lower component
    double l2 = 0.0;  // straight-segment length of the upper component
    JoinCase kind = JoinCase::Flat;  // Flat iff l1 <= l2 - 2
    double saved_length = 0.0;       // total length removed by the join, >= pi - 2
};

struct ConnectSumResult {
    PiecewiseCurve curve;
    JoinPlan plan;
};

/// Joins two prepared curves into one composite closed curve:
/// c1 must be straightened at its top floor, c2 at its bottom floor, and c1's
/// segment must not be longer than c2's. The components are placed with the
/// straight segments collinear, overlapping from a shared endpoint, prisms on
/// opposite sides; the shared-end quarter-circles become a vertical segment
/// of length 2, and the far ends are joined by a single horizontal segment
/// (Flat) or by a line tangent to both far quarter-circles (Bitangent).
/// Throws "not_prepared" or "overlap_detected".
ConnectSumResult connect_sum(const PiecewiseCurve& c1, const PiecewiseCurve& c2);

/// Straightens and orients two built curves, designating the one with the
/// shorter straight segment as the lower component (ties keep input order),
/// then joins them. Either extreme floor of either input may end up as the
/// joining floor; curves are flipped upside down (a rigid motion) as needed.
ConnectSumResult connect_sum_auto(const PiecewiseCurve& a, const PiecewiseCurve& b);

/// Samples tan(theta) <= 2*theta on [0, pi/4]; the inequality behind the
/// Bitangent length accounting. theta_samples >= 100.
bool tangent_inequality_check(int theta_samples);

}  // namespace arcrope
