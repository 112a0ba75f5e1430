#include "arcrope/curve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace arcrope {

double piece_length(const CurvePiece& p) {
    return std::visit([](const auto& x) { return x.length(); }, p);
}

Vec3 piece_start(const CurvePiece& p) {
    if (const auto* seg = std::get_if<LineSegment>(&p)) return seg->start;
    return std::get<CircularArc>(p).start;
}

Vec3 piece_end(const CurvePiece& p) {
    if (const auto* seg = std::get_if<LineSegment>(&p)) return seg->end;
    return std::get<CircularArc>(p).end_point();
}

Vec3 piece_start_tangent(const CurvePiece& p) {
    if (const auto* seg = std::get_if<LineSegment>(&p)) return seg->tangent();
    return std::get<CircularArc>(p).tangent_at(0.0);
}

Vec3 piece_end_tangent(const CurvePiece& p) {
    if (const auto* seg = std::get_if<LineSegment>(&p)) return seg->tangent();
    const auto& arc = std::get<CircularArc>(p);
    return arc.tangent_at(arc.length());
}

Vec3 piece_point_at(const CurvePiece& p, double s) {
    if (const auto* seg = std::get_if<LineSegment>(&p)) return seg->point_at(s);
    return std::get<CircularArc>(p).point_at(s);
}

Vec3 piece_tangent_at(const CurvePiece& p, double s) {
    if (const auto* seg = std::get_if<LineSegment>(&p)) return seg->tangent();
    return std::get<CircularArc>(p).tangent_at(s);
}

CurvePiece reverse_piece(const CurvePiece& p) {
    if (const auto* seg = std::get_if<LineSegment>(&p)) {
        return LineSegment{seg->end, seg->start};
    }
    const auto& arc = std::get<CircularArc>(p);
    // Same circle traversed the other way: start from the old end point and
    // rotate about the flipped normal.
    return CircularArc{arc.center, -arc.normal, arc.end_point(), arc.sweep};
}

CurvePiece transform_piece(const CurvePiece& p, const RigidMotion& m) {
    if (const auto* seg = std::get_if<LineSegment>(&p)) {
        return LineSegment{m.apply_point(seg->start), m.apply_point(seg->end)};
    }
    const auto& arc = std::get<CircularArc>(p);
    return CircularArc{m.apply_point(arc.center), m.apply_vector(arc.normal),
                       m.apply_point(arc.start), arc.sweep};
}

CurvePiece scale_piece(const CurvePiece& p, double factor) {
    if (const auto* seg = std::get_if<LineSegment>(&p)) {
        return LineSegment{seg->start * factor, seg->end * factor};
    }
    const auto& arc = std::get<CircularArc>(p);
    return CircularArc{arc.center * factor, arc.normal, arc.start * factor, arc.sweep};
}

CircularArc arc_from_start_tangent(const Vec3& start, const Vec3& tangent,
                                   const Vec3& plane_normal, double radius, double sweep) {
    // The radial direction at the start is tangent x normal, so the center
    // sits at start - radius * (tangent x normal). Normalizing keeps the
    // derived radius |start - center| exact for axis-aligned arcs.
    const Vec3 center = start - tangent.cross(plane_normal).normalized() * radius;
    return CircularArc{center, plane_normal, start, sweep};
}

double PiecewiseCurve::length() const {
    double sum = 0.0;
    for (const CurvePiece& p : pieces) sum += piece_length(p);
    return sum;
}

double infimal_radius_of_curvature(const PiecewiseCurve& c) {
    double best = std::numeric_limits<double>::infinity();
    for (const CurvePiece& p : c.pieces) {
        if (const auto* arc = std::get_if<CircularArc>(&p)) {
            best = std::min(best, arc->radius());
        }
    }
    return best;
}

std::vector<SamplePoint> sample(const PiecewiseCurve& c, double density) {
    std::vector<SamplePoint> out;
    double s0 = 0.0;
    for (std::size_t k = 0; k < c.pieces.size(); ++k) {
        const CurvePiece& p = c.pieces[k];
        const double len = piece_length(p);
        const int n = std::max(1, static_cast<int>(std::ceil(len * density)));
        for (int i = 0; i < n; ++i) {
            const double s = len * i / n;
            out.push_back({piece_point_at(p, s), piece_tangent_at(p, s), s0 + s});
        }
        s0 += len;
    }
    if (!c.closed && !c.pieces.empty()) {
        const CurvePiece& last = c.pieces.back();
        out.push_back({piece_end(last), piece_end_tangent(last), s0});
    }
    return out;
}

std::vector<ContinuityDefect> check_continuity(const PiecewiseCurve& c, double eps) {
    std::vector<ContinuityDefect> defects;
    const std::size_t n = c.pieces.size();
    if (n == 0) return defects;
    const std::size_t junctions = c.closed ? n : n - 1;
    for (std::size_t k = 0; k < junctions; ++k) {
        const CurvePiece& a = c.pieces[k];
        const CurvePiece& b = c.pieces[(k + 1) % n];
        const double pos_gap = (piece_end(a) - piece_start(b)).norm();
        const double tan_gap = (piece_end_tangent(a) - piece_start_tangent(b)).norm();
        if (pos_gap > eps || tan_gap > eps) {
            defects.push_back({k, pos_gap, tan_gap});
        }
    }
    return defects;
}

PiecewiseCurve reversed(const PiecewiseCurve& c) {
    PiecewiseCurve out;
    out.closed = c.closed;
    out.pieces.reserve(c.pieces.size());
    for (auto it = c.pieces.rbegin(); it != c.pieces.rend(); ++it) {
        out.pieces.push_back(reverse_piece(*it));
    }
    return out;
}

PiecewiseCurve transformed(const PiecewiseCurve& c, const RigidMotion& m) {
    PiecewiseCurve out;
    out.closed = c.closed;
    out.pieces.reserve(c.pieces.size());
    for (const CurvePiece& p : c.pieces) out.pieces.push_back(transform_piece(p, m));
    return out;
}

PiecewiseCurve scaled(const PiecewiseCurve& c, double factor) {
    PiecewiseCurve out;
    out.closed = c.closed;
    out.pieces.reserve(c.pieces.size());
    for (const CurvePiece& p : c.pieces) out.pieces.push_back(scale_piece(p, factor));
    return out;
}

CurveEvaluator::CurveEvaluator(const PiecewiseCurve& c) : curve_(&c) {
    cumulative_.reserve(c.pieces.size() + 1);
    cumulative_.push_back(0.0);
    for (const CurvePiece& p : c.pieces) {
        total_ += piece_length(p);
        cumulative_.push_back(total_);
    }
}

std::pair<std::size_t, double> CurveEvaluator::locate(double s) const {
    if (curve_->closed) {
        s = std::fmod(s, total_);
        if (s < 0.0) s += total_;
    } else {
        s = std::clamp(s, 0.0, total_);
    }
    const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), s);
    std::size_t idx = (it == cumulative_.begin()) ? 0 : (it - cumulative_.begin()) - 1;
    idx = std::min(idx, curve_->pieces.size() - 1);
    return {idx, s - cumulative_[idx]};
}

Vec3 CurveEvaluator::point(double s) const {
    const auto [idx, local] = locate(s);
    return piece_point_at(curve_->pieces[idx], local);
}

Vec3 CurveEvaluator::tangent(double s) const {
    const auto [idx, local] = locate(s);
    return piece_tangent_at(curve_->pieces[idx], local);
}

}  // namespace arcrope
