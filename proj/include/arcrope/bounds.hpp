#pragma once

#include <string>
#include <vector>

namespace arcrope {

/// Sharp upper bound on the total skip of an arc-presentation with the given
/// arc-index: (alpha^2 - 1)/2 for odd alpha, alpha^2/2 for even.
long long skip_bound(int alpha);

/// Ropelength upper bound for a non-split link with crossing number c.
/// exact=true evaluates the closed-form coefficients
///   (2/pi + 1) c^2 + (8/pi + 2 + pi) c + (8/pi + 4 pi/3);
/// exact=false uses the rounded-up three-figure constants 1.64 / 7.69 / 6.74.
/// The exact value never exceeds the decimal one.
double crossing_number_bound(int crossing, bool exact);

/// Composite-link bound: the sum of per-component decimal bounds,
/// 1.64 sum c_i^2 + 7.69 sum c_i + 6.74 n. Throws "empty_composite".
double composite_crossing_bound(const std::vector<int>& crossings);

/// Verifies the series step used to majorize the construction length:
///   2 a / tan(pi/a) + (pi-2) a + a^2  <=  (2/pi + 1) a^2 + (pi-2) a - 2 pi/3,
/// which follows from cot(x) <= 1/x - x/3. True for every alpha >= 3.
bool cotangent_majorant_holds(int alpha);

/// All bound values derived from one crossing number, using the arc-index
/// hypothesis alpha <= c + 2 (alpha_used is hypothesis-sourced, not computed
/// from a diagram).
struct BoundReport {
    int crossing = 0;
    int alpha_used = 0;       // c + 2
    long long max_skip = 0;   // skip_bound(alpha_used)
    double prism_bound = 0.0;  // construction bound at (alpha_used, max_skip)
    double exact_bound = 0.0;
    double decimal_bound = 0.0;
};

BoundReport bound_report_for_crossing(int crossing);

/// key=value block, one field per line.
std::string format_bound_report(const BoundReport& r);

}  // namespace arcrope
