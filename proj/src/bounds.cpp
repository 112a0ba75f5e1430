#include "arcrope/bounds.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "arcrope/builder.hpp"
#include "arcrope/errors.hpp"

namespace arcrope {

namespace {
constexpr double kPi = std::numbers::pi;
}

long long skip_bound(int alpha) {
    if (alpha < 2) {
        throw ValidationError("alpha_too_small", "skip bound needs alpha >= 2");
    }
    const long long a = alpha;
    return (alpha % 2 == 0) ? a * a / 2 : (a * a - 1) / 2;
}

double crossing_number_bound(int crossing, bool exact) {
    if (crossing < 2) {
        throw ValidationError("bad_parameter", "no nontrivial link has fewer than 2 crossings");
    }
    const double c = crossing;
    if (exact) {
        return (2.0 / kPi + 1.0) * c * c + (8.0 / kPi + 2.0 + kPi) * c + (8.0 / kPi + 4.0 * kPi / 3.0);
    }
    return 1.64 * c * c + 7.69 * c + 6.74;
}

double composite_crossing_bound(const std::vector<int>& crossings) {
    if (crossings.empty()) {
        throw ValidationError("empty_composite", "composite bound needs at least one component");
    }
    double sum = 0.0;
    for (int c : crossings) sum += crossing_number_bound(c, false);
    return sum;
}

bool cotangent_majorant_holds(int alpha) {
    if (alpha < 3) {
        throw ValidationError("alpha_too_small", "majorant check needs alpha >= 3");
    }
    const double a = alpha;
    const double lhs = 2.0 * a / std::tan(kPi / a) + (kPi - 2.0) * a + a * a;
    const double rhs = (2.0 / kPi + 1.0) * a * a + (kPi - 2.0) * a - 2.0 * kPi / 3.0;
    return lhs <= rhs + 1e-12;
}

BoundReport bound_report_for_crossing(int crossing) {
    BoundReport r;
    r.crossing = crossing;
    r.alpha_used = crossing + 2;
    r.max_skip = skip_bound(r.alpha_used);
    r.prism_bound = ropelength_bound(r.alpha_used, r.max_skip);
    r.exact_bound = crossing_number_bound(crossing, true);
    r.decimal_bound = crossing_number_bound(crossing, false);
    return r;
}

std::string format_bound_report(const BoundReport& r) {
    std::ostringstream os;
    os.precision(10);
    os << "crossing=" << r.crossing << '\n'
       << "alpha=" << r.alpha_used << '\n'
       << "skip_bound=" << r.max_skip << '\n'
       << "prism_bound=" << r.prism_bound << '\n'
       << "exact_bound=" << r.exact_bound << '\n'
       << "decimal_bound=" << r.decimal_bound << '\n';
    return os.str();
}

}  // namespace arcrope
