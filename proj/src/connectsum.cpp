#include "arcrope/connectsum.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "arcrope/errors.hpp"
#include "arcrope/thickness.hpp"

namespace arcrope {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Vec3 kUp{0.0, 0.0, 1.0};
constexpr double kGeomTol = 1e-6;

double piece_extreme_z(const CurvePiece& p, bool top) {
    if (const auto* seg = std::get_if<LineSegment>(&p)) {
        return top ? std::max(seg->start.z, seg->end.z) : std::min(seg->start.z, seg->end.z);
    }
    const auto& arc = std::get<CircularArc>(p);
    const Vec3 a = arc.start - arc.center;
    const Vec3 b = arc.normal.cross(a);
    double best = top ? std::max(arc.start.z, arc.end_point().z)
                      : std::min(arc.start.z, arc.end_point().z);
    // Interior extrema of z(t) = center.z + a.z cos t + b.z sin t.
    const double t0 = std::atan2(b.z, a.z);
    for (double t : {t0, t0 + kPi, t0 + 2.0 * kPi}) {
        if (t > 0.0 && t < arc.sweep) {
            const double z = arc.center.z + a.z * std::cos(t) + b.z * std::sin(t);
            best = top ? std::max(best, z) : std::min(best, z);
        }
    }
    return best;
}

struct FloorPattern {
    enum class Kind { Straight, Binding, Unrecognized };
    Kind kind = Kind::Unrecognized;
    std::size_t lead = 0, mid = 0, trail = 0;  // consecutive chain positions
    double plane_z = 0.0;
    Vec3 q_lead, q_trail;  // fin junction points one floor-half away from the plane
    double seg_length = 0.0;  // Straight only
};

bool is_floor_quarter(const CurvePiece& p, double plane_z, double s) {
    const auto* arc = std::get_if<CircularArc>(&p);
    if (!arc) return false;
    if (std::fabs(arc->radius() - 1.0) > kGeomTol) return false;
    if (std::fabs(arc->sweep - kPi / 2.0) > kGeomTol) return false;
    // One end on the floor plane, the other one unit toward the prism body
    // with a vertical tangent.
    const double za = arc->start.z, zb = arc->end_point().z;
    const bool start_far = std::fabs(za - (plane_z - s)) < kGeomTol && std::fabs(zb - plane_z) < kGeomTol;
    const bool end_far = std::fabs(zb - (plane_z - s)) < kGeomTol && std::fabs(za - plane_z) < kGeomTol;
    return start_far || end_far;
}

FloorPattern detect_extreme_floor(const PiecewiseCurve& c, ExtremeFloor which) {
    FloorPattern out;
    const std::size_t n = c.pieces.size();
    if (n < 6) return out;
    const bool top = which == ExtremeFloor::Top;
    const double s = top ? 1.0 : -1.0;

    double z_ext = top ? -1e300 : 1e300;
    std::vector<double> extreme(n);
    for (std::size_t i = 0; i < n; ++i) {
        extreme[i] = piece_extreme_z(c.pieces[i], top);
        z_ext = top ? std::max(z_ext, extreme[i]) : std::min(z_ext, extreme[i]);
    }

    // Only the extreme floor's structure reaches within half a unit of the
    // extreme plane: one binding piece plus the two fin quarter-circles.
    std::vector<std::size_t> band;
    for (std::size_t i = 0; i < n; ++i) {
        if (s * (extreme[i] - z_ext) > -0.5) band.push_back(i);
    }
    if (band.size() != 3) return out;

    for (std::size_t lead : band) {
        const std::size_t mid = (lead + 1) % n;
        const std::size_t trail = (lead + 2) % n;
        const bool matches = std::find(band.begin(), band.end(), mid) != band.end() &&
                             std::find(band.begin(), band.end(), trail) != band.end();
        if (!matches) continue;

        if (!is_floor_quarter(c.pieces[lead], z_ext, s)) continue;
        if (!is_floor_quarter(c.pieces[trail], z_ext, s)) continue;
        const Vec3 q_lead = piece_start(c.pieces[lead]);
        const Vec3 q_trail = piece_end(c.pieces[trail]);
        if (std::fabs(q_lead.z - (z_ext - s)) > kGeomTol) continue;
        if (std::fabs(q_trail.z - (z_ext - s)) > kGeomTol) continue;
        if (std::fabs(piece_start_tangent(c.pieces[lead]).z - s) > kGeomTol) continue;
        if (std::fabs(piece_end_tangent(c.pieces[trail]).z + s) > kGeomTol) continue;

        const CurvePiece& midp = c.pieces[mid];
        FloorPattern::Kind kind = FloorPattern::Kind::Unrecognized;
        if (const auto* seg = std::get_if<LineSegment>(&midp)) {
            if (std::fabs(seg->start.z - z_ext) < kGeomTol && std::fabs(seg->end.z - z_ext) < kGeomTol) {
                kind = FloorPattern::Kind::Straight;
                out.seg_length = seg->length();
            }
        } else {
            const auto& arc = std::get<CircularArc>(midp);
            if (std::fabs(std::fabs(arc.normal.z) - 1.0) < kGeomTol &&
                std::fabs(arc.start.z - z_ext) < kGeomTol && arc.radius() > 1.0 - kGeomTol) {
                kind = FloorPattern::Kind::Binding;
            }
        }
        if (kind == FloorPattern::Kind::Unrecognized) continue;

        out.kind = kind;
        out.lead = lead;
        out.mid = mid;
        out.trail = trail;
        out.plane_z = z_ext;
        out.q_lead = q_lead;
        out.q_trail = q_trail;
        return out;
    }
    return out;
}

}  // namespace

PiecewiseCurve straighten_extreme_floor(const PiecewiseCurve& c, ExtremeFloor which) {
    const FloorPattern pat = detect_extreme_floor(c, which);
    if (pat.kind == FloorPattern::Kind::Unrecognized) {
        throw ValidationError("not_builder_output",
                              "extreme floor structure not recognized; straightening expects "
                              "a built curve (binding piece flanked by unit quarter-circles)");
    }
    const bool top = which == ExtremeFloor::Top;
    const double s = top ? 1.0 : -1.0;
    const std::size_t n = c.pieces.size();

    const Vec3 b_lead{pat.q_lead.x, pat.q_lead.y, pat.plane_z};
    const Vec3 b_trail{pat.q_trail.x, pat.q_trail.y, pat.plane_z};
    const double span = (b_trail - b_lead).norm();
    if (span <= 2.0 - kGeomTol) {
        throw ValidationError("not_builder_output",
                              "floor junction axes too close to straighten");
    }
    const Vec3 dir = (b_trail - b_lead) / span;
    const Vec3 plane_normal = top ? kUp.cross(dir) : dir.cross(kUp);

    PiecewiseCurve out;
    out.closed = true;
    out.pieces.reserve(n);
    out.pieces.push_back(arc_from_start_tangent(pat.q_lead, kUp * s, plane_normal, 1.0, kPi / 2.0));
    if (span - 2.0 > 1e-12) {
        out.pieces.push_back(LineSegment{b_lead + dir, b_trail - dir});
    }
    out.pieces.push_back(arc_from_start_tangent(b_trail - dir, dir, plane_normal, 1.0, kPi / 2.0));
    for (std::size_t k = 1; k + 2 < n; ++k) {
        out.pieces.push_back(c.pieces[(pat.trail + k) % n]);
    }
    return out;
}

namespace {

// Moves a prepared curve so its straight floor segment starts at the origin
// and runs along +x at height 0, with the prism body's centroid on the
// requested side of the xz-plane (the curve orientation is flipped when the
// body comes out on the wrong side).
PiecewiseCurve place_prepared(PiecewiseCurve c, ExtremeFloor which, double want_side) {
    for (int attempt = 0; attempt < 2; ++attempt) {
        const FloorPattern pat = detect_extreme_floor(c, which);
        if (pat.kind != FloorPattern::Kind::Straight) {
            throw std::logic_error("place_prepared: pattern lost during placement");
        }
        const Vec3 e_lead = piece_end(c.pieces[pat.lead]);
        const Vec3 e_trail = piece_start(c.pieces[pat.trail]);
        const Vec3 dir = ((e_trail - e_lead).norm() > 1e-12)
                             ? (e_trail - e_lead).normalized()
                             : piece_end_tangent(c.pieces[pat.lead]);
        const RigidMotion rot = RigidMotion::rotation_z(-std::atan2(dir.y, dir.x));
        const RigidMotion move =
            RigidMotion::translation(-rot.apply_point(e_lead)).compose(rot);
        c = transformed(c, move);

        Vec3 centroid;
        for (const CurvePiece& p : c.pieces) centroid += piece_start(p);
        centroid = centroid / static_cast<double>(c.pieces.size());
        if (centroid.y * want_side >= -1e-9 || attempt == 1) return c;
        c = reversed(c);
    }
    return c;
}

}  // namespace

ConnectSumResult connect_sum(const PiecewiseCurve& c1, const PiecewiseCurve& c2) {
    if (detect_extreme_floor(c1, ExtremeFloor::Top).kind != FloorPattern::Kind::Straight) {
        throw ValidationError("not_prepared", "first curve is not straightened at its top floor");
    }
    if (detect_extreme_floor(c2, ExtremeFloor::Bottom).kind != FloorPattern::Kind::Straight) {
        throw ValidationError("not_prepared", "second curve is not straightened at its bottom floor");
    }

    const PiecewiseCurve a = place_prepared(c1, ExtremeFloor::Top, -1.0);
    const PiecewiseCurve b = place_prepared(c2, ExtremeFloor::Bottom, 1.0);
    const FloorPattern pa = detect_extreme_floor(a, ExtremeFloor::Top);
    const FloorPattern pb = detect_extreme_floor(b, ExtremeFloor::Bottom);
    const double l1 = pa.seg_length;
    const double l2 = pb.seg_length;
    if (l1 > l2 + 1e-9) {
        throw ValidationError("not_prepared",
                              "first curve must carry the shorter straight segment");
    }

    // Canonical frame: both segments run from the origin along +x at z = 0;
    // the shared junction axis is x = -1, the far junction axes are x = l+1.
    const Vec3 q1l = pa.q_lead, q1t = pa.q_trail;  // z = -1
    const Vec3 q2l = pb.q_lead, q2t = pb.q_trail;  // z = +1
    if ((q1l - Vec3{-1, 0, -1}).norm() > 1e-6 || (q2l - Vec3{-1, 0, 1}).norm() > 1e-6) {
        throw std::logic_error("connect_sum: canonical placement failed");
    }

    const std::size_t n1 = a.pieces.size();
    const std::size_t n2 = b.pieces.size();
    PiecewiseCurve out;
    out.closed = true;
    out.pieces.reserve(n1 + n2);

    // Shared endpoint: both lead quarter-circles become one vertical segment.
    out.pieces.push_back(LineSegment{q1l, q2l});

    // All of the upper component, reversed, from its shared-end fin back
    // around to its far bottom junction.
    for (std::size_t k = 1; k + 2 < n2; ++k) {
        out.pieces.push_back(reverse_piece(b.pieces[(pb.lead + n2 - k) % n2]));
    }

    JoinPlan plan;
    plan.l1 = l1;
    plan.l2 = l2;
    if (l1 <= l2 - 2.0) {
        // Flat: the far quarter of the lower component swivels to face +x and
        // a single segment of length l2 - l1 - 2 bridges the gap.
        plan.kind = JoinCase::Flat;
        out.pieces.push_back(reverse_piece(b.pieces[pb.trail]));  // down to (l2, 0, 0)
        const Vec3 e2{l2, 0, 0};
        const Vec3 e1{l1 + 2.0, 0, 0};
        if ((e2 - e1).norm() > 1e-12) {
            out.pieces.push_back(LineSegment{e2, e1});
        }
        out.pieces.push_back(arc_from_start_tangent(e1, Vec3{-1, 0, 0}, Vec3{0, -1, 0}, 1.0, kPi / 2.0));
    } else {
        // Bitangent: descend along the far circles and the line tangent to
        // both. The half-diagonal has length tan(theta) <= 2*theta, the arc
        // portion it replaces.
        plan.kind = JoinCase::Bitangent;
        const double theta = std::atan((l1 + 2.0 - l2) / 2.0);
        const double sweep = kPi / 2.0 - 2.0 * theta;
        const Vec3 c_up = q2t - Vec3{1, 0, 0};   // (l2, 0, 1)
        const Vec3 c_dn = q1t + Vec3{1, 0, 0};   // (l1 + 2, 0, -1)
        const Vec3 tp{-std::sin(2.0 * theta), 0.0, std::cos(2.0 * theta)};
        const Vec3 t_up = c_up - tp;
        const Vec3 t_dn = c_dn + tp;
        if (sweep > 1e-12) {
            out.pieces.push_back(CircularArc{c_up, Vec3{0, 1, 0}, q2t, sweep});
            out.pieces.push_back(LineSegment{t_up, t_dn});
            out.pieces.push_back(CircularArc{c_dn, Vec3{0, -1, 0}, t_dn, sweep});
        } else {
            out.pieces.push_back(LineSegment{q2t, q1t});
        }
    }

    // Remainder of the lower component in original order, far fin first.
    for (std::size_t k = 1; k + 2 < n1; ++k) {
        out.pieces.push_back(a.pieces[(pa.trail + k) % n1]);
    }

    if (!check_continuity(out, kJoinTolerance).empty()) {
        throw std::logic_error("connect_sum: junction mismatch in assembled composite");
    }
    if (tube_overlap_suspected(out)) {
        throw ValidationError("overlap_detected",
                              "composite placement brings unit tubes into contact");
    }

    plan.saved_length = a.length() + b.length() - out.length();
    return {std::move(out), plan};
}

ConnectSumResult connect_sum_auto(const PiecewiseCurve& a, const PiecewiseCurve& b) {
    const RigidMotion flip = RigidMotion::rotation_x(kPi);  // top floor <-> bottom floor

    const PiecewiseCurve a_top = straighten_extreme_floor(a, ExtremeFloor::Top);
    const PiecewiseCurve a_bot = straighten_extreme_floor(a, ExtremeFloor::Bottom);
    const PiecewiseCurve b_top = straighten_extreme_floor(b, ExtremeFloor::Top);
    const PiecewiseCurve b_bot = straighten_extreme_floor(b, ExtremeFloor::Bottom);

    const auto seg_len = [](const PiecewiseCurve& c, ExtremeFloor which) {
        return detect_extreme_floor(c, which).seg_length;
    };
    const double lat = seg_len(a_top, ExtremeFloor::Top);
    const double lab = seg_len(a_bot, ExtremeFloor::Bottom);
    const double lbt = seg_len(b_top, ExtremeFloor::Top);
    const double lbb = seg_len(b_bot, ExtremeFloor::Bottom);

    // Candidate (lower, upper) pairings; the lower component needs the
    // shorter segment. Prefer the first input as the lower component and
    // unflipped floors.
    struct Option {
        const PiecewiseCurve* lower;
        bool flip_lower;
        double l1;
        const PiecewiseCurve* upper;
        bool flip_upper;
        double l2;
    };
    const std::array<Option, 8> options{{
        {&a_top, false, lat, &b_bot, false, lbb},
        {&a_top, false, lat, &b_top, true, lbt},
        {&a_bot, true, lab, &b_bot, false, lbb},
        {&a_bot, true, lab, &b_top, true, lbt},
        {&b_top, false, lbt, &a_bot, false, lab},
        {&b_top, false, lbt, &a_top, true, lat},
        {&b_bot, true, lbb, &a_bot, false, lab},
        {&b_bot, true, lbb, &a_top, true, lat},
    }};
    for (const Option& opt : options) {
        if (opt.l1 > opt.l2 + 1e-9) continue;
        const PiecewiseCurve lower = opt.flip_lower ? transformed(*opt.lower, flip) : *opt.lower;
        const PiecewiseCurve upper = opt.flip_upper ? transformed(*opt.upper, flip) : *opt.upper;
        return connect_sum(lower, upper);
    }
    throw std::logic_error("connect_sum_auto: no feasible floor pairing");
}

bool tangent_inequality_check(int theta_samples) {
    if (theta_samples < 100) {
        throw std::invalid_argument("tangent_inequality_check needs at least 100 samples");
    }
    for (int i = 0; i <= theta_samples; ++i) {
        const double theta = (kPi / 4.0) * i / theta_samples;
        if (std::tan(theta) > 2.0 * theta + 1e-12) return false;
    }
    return true;
}

}  // namespace arcrope
