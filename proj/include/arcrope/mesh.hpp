#pragma once

#include <array>
#include <string>
#include <vector>

#include "arcrope/curve.hpp"

namespace arcrope {

struct TubeMesh {
    std::vector<Vec3> vertices;
    std::vector<std::array<int, 3>> faces;  // 0-based triangle indices
};

/// Sweeps a circular cross-section of `radius` with `segments` sides along
/// the curve, sampled at `density` rings per unit length. Frames propagate by
/// double reflection (rotation minimizing); for closed curves the residual
/// frame holonomy is distributed as a uniform corrective twist so the seam
/// closes watertight. Throws "bad_parameter" for segments < 6 or radius <= 0,
/// "radius_too_large" for radius > 1.
TubeMesh sweep_tube(const PiecewiseCurve& c, int segments, double radius, double density);

std::string to_obj(const TubeMesh& mesh);

/// True when every edge borders exactly two triangles and no triangle is
/// degenerate.
bool is_watertight(const TubeMesh& mesh);

}  // namespace arcrope
