#pragma once

#include <string>
#include <vector>

#include "arcrope/curve.hpp"

namespace arcrope {

/// Curve interchange format, one block per curve:
///   curve closed=<0|1> pieces=<n>
///   seg x0 y0 z0 x1 y1 z1
///   arc cx cy cz nx ny nz sx sy sz sweep
/// Values are printed with full double precision, so round-trips are exact.
std::string emit_curves(const std::vector<PiecewiseCurve>& curves);
std::string emit_curve(const PiecewiseCurve& c);

std::vector<PiecewiseCurve> parse_curves(const std::string& text);

/// Convenience for consumers that need exactly one closed curve.
PiecewiseCurve parse_single_curve(const std::string& text);

std::vector<PiecewiseCurve> load_curves(const std::string& path);
void save_curves(const std::vector<PiecewiseCurve>& curves, const std::string& path);

}  // namespace arcrope
