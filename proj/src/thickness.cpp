#include "arcrope/thickness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "arcrope/errors.hpp"

namespace arcrope {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kCriticalityTol = 1e-6;  // |f|, |g| <= tol * chord length

struct SampleArrays {
    std::vector<double> px, py, pz;
    std::vector<double> tx, ty, tz;
    std::vector<double> s;
    std::size_t n = 0;
    double total = 0.0;

    explicit SampleArrays(const PiecewiseCurve& c, double density) {
        const auto pts = sample(c, density);
        n = pts.size();
        px.reserve(n); py.reserve(n); pz.reserve(n);
        tx.reserve(n); ty.reserve(n); tz.reserve(n);
        s.reserve(n);
        for (const SamplePoint& p : pts) {
            px.push_back(p.position.x); py.push_back(p.position.y); pz.push_back(p.position.z);
            tx.push_back(p.tangent.x);  ty.push_back(p.tangent.y);  tz.push_back(p.tangent.z);
            s.push_back(p.arclength);
        }
        total = c.length();
    }

    double separation(std::size_t i, std::size_t j) const {
        const double d = std::fabs(s[j] - s[i]);
        return std::min(d, total - d);
    }
    double dist2(std::size_t i, std::size_t j) const {
        const double dx = px[j] - px[i], dy = py[j] - py[i], dz = pz[j] - pz[i];
        return dx * dx + dy * dy + dz * dz;
    }
    // Criticality residuals of the chord from sample i to sample j.
    double f(std::size_t i, std::size_t j) const {
        return tx[i] * (px[j] - px[i]) + ty[i] * (py[j] - py[i]) + tz[i] * (pz[j] - pz[i]);
    }
    double g(std::size_t i, std::size_t j) const {
        return tx[j] * (px[j] - px[i]) + ty[j] * (py[j] - py[i]) + tz[j] * (pz[j] - pz[i]);
    }
};

struct Candidate {
    std::size_t i, j;
    double corner_dist;
};

bool sign_mixed(double a, double b, double c, double d) {
    const bool any_nonpos = a <= 0 || b <= 0 || c <= 0 || d <= 0;
    const bool any_nonneg = a >= 0 || b >= 0 || c >= 0 || d >= 0;
    return any_nonpos && any_nonneg;
}

struct RefineOutcome {
    double s = 0.0, t = 0.0;
    double dist = 0.0;
    bool accepted = false;
};

// Chord residuals and length at parameters (s, t).
struct ChordFn {
    const CurveEvaluator& eval;

    double operator()(double s, double t, double* dist_out = nullptr,
                      double* f_out = nullptr, double* g_out = nullptr) const {
        const Vec3 ps = eval.point(s), ts = eval.tangent(s);
        const Vec3 pt = eval.point(t), tt = eval.tangent(t);
        const Vec3 c = pt - ps;
        if (dist_out) *dist_out = c.norm();
        const double f = ts.dot(c);
        const double g = tt.dot(c);
        if (f_out) *f_out = f;
        if (g_out) *g_out = g;
        return f * f + g * g;
    }
};

// Golden-section minimization of a 1D slice, 32 fixed iterations.
template <typename Fn>
double golden_min(Fn&& fn, double a, double b) {
    constexpr double kInvPhi = 0.6180339887498949;
    double x1 = b - kInvPhi * (b - a);
    double x2 = a + kInvPhi * (b - a);
    double f1 = fn(x1), f2 = fn(x2);
    for (int it = 0; it < 32; ++it) {
        if (f1 < f2) {
            b = x2; x2 = x1; f2 = f1;
            x1 = b - kInvPhi * (b - a);
            f1 = fn(x1);
        } else {
            a = x1; x1 = x2; f1 = f2;
            x2 = a + kInvPhi * (b - a);
            f2 = fn(x2);
        }
    }
    return f1 < f2 ? x1 : x2;
}

// Coordinate-wise golden-section descent on the residual norm, starting from
// the given cell corner and staying within +-window of it per coordinate.
RefineOutcome refine_cell(const CurveEvaluator& eval, double s0, double t0, double window,
                          int refine_iters) {
    ChordFn fn{eval};
    double s = s0 + window / 2.0;
    double t = t0 + window / 2.0;
    for (int round = 0; round < refine_iters; ++round) {
        {
            const Vec3 ps = eval.point(s), ts = eval.tangent(s);
            t = golden_min(
                [&](double tt_param) {
                    const Vec3 pt = eval.point(tt_param);
                    const Vec3 tt = eval.tangent(tt_param);
                    const Vec3 c = pt - ps;
                    const double f = ts.dot(c), g = tt.dot(c);
                    return f * f + g * g;
                },
                t - window, t + window);
        }
        {
            const Vec3 pt = eval.point(t), tt = eval.tangent(t);
            s = golden_min(
                [&](double ss_param) {
                    const Vec3 ps = eval.point(ss_param);
                    const Vec3 ts = eval.tangent(ss_param);
                    const Vec3 c = pt - ps;
                    const double f = ts.dot(c), g = tt.dot(c);
                    return f * f + g * g;
                },
                s - window, s + window);
        }
        double dist = 0.0;
        const double h = fn(s, t, &dist);
        if (h <= (0.01 * kCriticalityTol * dist) * (0.01 * kCriticalityTol * dist)) {
            break;
        }
    }

    RefineOutcome out;
    out.s = s;
    out.t = t;
    double f = 0.0, g = 0.0;
    fn(s, t, &out.dist, &f, &g);
    out.accepted = std::fabs(f) <= kCriticalityTol * out.dist &&
                   std::fabs(g) <= kCriticalityTol * out.dist;
    return out;
}

}  // namespace

DcsdResult dcsd_estimate(const PiecewiseCurve& c, double density, int refine_iters) {
    if (!c.closed) {
        throw ValidationError("curve_not_closed", "dcsd is defined for closed curves");
    }
    if (density < 10.0) {
        throw ValidationError("bad_parameter", "dcsd needs density >= 10 samples per unit");
    }

    const SampleArrays sm(c, density);
    const std::size_t n = sm.n;
    const CurveEvaluator eval(c);
    const double exclusion = 8.0 / density;

    // Largest gap between consecutive samples; bounds how far a refined root
    // can move from its cell corner.
    double cell = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double next = (i + 1 < n) ? sm.s[i + 1] : sm.total;
        cell = std::max(cell, next - sm.s[i]);
    }

    DcsdResult result;
    result.samples_used = n;
    result.dcsd = std::numeric_limits<double>::infinity();
    double best_near = std::numeric_limits<double>::infinity();  // fallback
    ChordWitness near_witness;

    // Only pairs within `cutoff` can hold the minimal critical chord candidate;
    // escalate when nothing is found so large round curves still terminate.
    double cutoff = 4.0;
    double max_dist = 0.0;
    for (;;) {
        std::vector<Candidate> candidates;
        const double cutoff2 = cutoff * cutoff;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                const double d2 = sm.dist2(i, j);
                max_dist = std::max(max_dist, d2);
                if (d2 >= cutoff2) continue;
                if (sm.separation(i, j) <= exclusion) continue;
                const std::size_t i1 = (i + 1) % n;
                const std::size_t j1 = (j + 1) % n;
                if (!sign_mixed(sm.f(i, j), sm.f(i1, j), sm.f(i, j1), sm.f(i1, j1))) continue;
                if (!sign_mixed(sm.g(i, j), sm.g(i1, j), sm.g(i, j1), sm.g(i1, j1))) continue;
                const double corner = std::min(std::min(std::sqrt(d2), std::sqrt(sm.dist2(i1, j))),
                                               std::min(std::sqrt(sm.dist2(i, j1)),
                                                        std::sqrt(sm.dist2(i1, j1))));
                candidates.push_back({i, j, corner});
            }
        }
        std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
            if (a.corner_dist != b.corner_dist) return a.corner_dist < b.corner_dist;
            if (a.i != b.i) return a.i < b.i;
            return a.j < b.j;
        });

        for (const Candidate& cand : candidates) {
            if (cand.corner_dist > std::min(result.dcsd, best_near) + 4.0 * cell) break;
            const RefineOutcome ref =
                refine_cell(eval, sm.s[cand.i], sm.s[cand.j], 1.5 * cell, refine_iters);
            const double gap = std::fabs(std::fmod(ref.t - ref.s, sm.total));
            const double sep = std::min(gap, sm.total - gap);
            if (sep <= exclusion) continue;  // refinement drifted to near-adjacent points
            const ChordWitness wit{ref.s, ref.t, eval.point(ref.s), eval.point(ref.t)};
            if (ref.accepted) {
                if (ref.dist < result.dcsd) {
                    result.dcsd = ref.dist;
                    result.witness = wit;
                    result.critical_found = true;
                }
            } else if (ref.dist < best_near) {
                best_near = ref.dist;
                near_witness = wit;
            }
        }

        // Found roots comfortably inside the cutoff: nothing shorter was missed.
        if (result.critical_found && result.dcsd <= cutoff - 0.5) break;
        if (cutoff * cutoff > max_dist) break;  // whole curve scanned
        cutoff *= 2.0;
    }

    if (!result.critical_found) {
        result.dcsd = best_near;
        result.witness = near_witness;
    }
    return result;
}

ThicknessReport thickness_report(const PiecewiseCurve& c, double density, int refine_iters) {
    const DcsdResult d = dcsd_estimate(c, density, refine_iters);
    ThicknessReport report;
    report.min_radius = infimal_radius_of_curvature(c);
    report.dcsd = d.dcsd;
    report.thickness = std::min(report.min_radius, d.dcsd / 2.0);
    report.witness = d.witness;
    report.samples_used = d.samples_used;
    report.tolerance = kCriticalityTol;
    report.critical_found = d.critical_found;
    return report;
}

double triple_circumradius_check(const PiecewiseCurve& c, double density) {
    if (density < 10.0) {
        throw ValidationError("bad_parameter", "circumradius check needs density >= 10");
    }
    const SampleArrays sm(c, density);
    const std::size_t n = sm.n;

    // R^2 = |ab|^2 |ac|^2 |bc|^2 / (4 |ab x ac|^2); minimized without sqrt.
    double best_r2 = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 2 < n; ++i) {
        for (std::size_t j = i + 1; j + 1 < n; ++j) {
            const double abx = sm.px[j] - sm.px[i], aby = sm.py[j] - sm.py[i],
                         abz = sm.pz[j] - sm.pz[i];
            const double ab2 = abx * abx + aby * aby + abz * abz;
            for (std::size_t k = j + 1; k < n; ++k) {
                const double acx = sm.px[k] - sm.px[i], acy = sm.py[k] - sm.py[i],
                             acz = sm.pz[k] - sm.pz[i];
                const double bcx = sm.px[k] - sm.px[j], bcy = sm.py[k] - sm.py[j],
                             bcz = sm.pz[k] - sm.pz[j];
                const double ac2 = acx * acx + acy * acy + acz * acz;
                const double bc2 = bcx * bcx + bcy * bcy + bcz * bcz;
                const double crx = aby * acz - abz * acy;
                const double cry = abz * acx - abx * acz;
                const double crz = abx * acy - aby * acx;
                const double cr2 = crx * crx + cry * cry + crz * crz;
                if (cr2 < 1e-24) continue;  // collinear: infinite circumradius
                const double r2 = ab2 * ac2 * bc2 / (4.0 * cr2);
                if (r2 < best_r2) best_r2 = r2;
            }
        }
    }
    return std::sqrt(best_r2);
}

bool tube_overlap_suspected(const PiecewiseCurve& c, double density, double slack) {
    const SampleArrays sm(c, density);
    const std::size_t n = sm.n;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double sep = sm.separation(i, j);
            if (sep < 1e-9) continue;
            const double eff = std::min(sep, kPi);
            const double lower = 2.0 * std::sin(eff / 2.0) * (1.0 - slack);
            if (sm.dist2(i, j) < lower * lower) return true;
        }
    }
    return false;
}

}  // namespace arcrope
