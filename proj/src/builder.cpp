#include "arcrope/builder.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "arcrope/errors.hpp"

namespace arcrope {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Vec3 kUp{0.0, 0.0, 1.0};

}  // namespace

PrismLayout layout(const ArcPresentation& a) {
    const int alpha = a.alpha();
    if (alpha < 3) {
        throw ValidationError("alpha_too_small",
                              "the binding prism needs alpha >= 3 (got " +
                                  std::to_string(alpha) + ")");
    }

    PrismLayout out;
    out.alpha = alpha;
    out.apothem = 1.0 / std::tan(kPi / alpha);
    out.total_height = 2.0 * alpha;

    // Page order: faces sorted by page angle, re-spaced uniformly.
    out.face_arc.resize(alpha);
    std::iota(out.face_arc.begin(), out.face_arc.end(), 0);
    std::sort(out.face_arc.begin(), out.face_arc.end(),
              [&](int i, int j) { return a.arcs[i].theta < a.arcs[j].theta; });

    out.arc_face.resize(alpha);
    out.face_directions.resize(alpha);
    for (int k = 0; k < alpha; ++k) {
        out.arc_face[out.face_arc[k]] = k;
        const double phi = 2.0 * kPi * k / alpha;
        out.face_directions[k] = {std::cos(phi), std::sin(phi), 0.0};
    }
    return out;
}

double ropelength_bound(int alpha, long long skip) {
    return 2.0 * alpha / std::tan(kPi / alpha) + (kPi - 2.0) * alpha + 2.0 * skip;
}

namespace {

// Fin pieces from level `from` to level `to` on the face with outward unit
// normal u. The first quarter-circle leaves the face point horizontally and
// turns vertical; the second returns to horizontal one unit outside the next
// face point. Vertical segment omitted for adjacent levels.
std::vector<CurvePiece> fin_pieces(const PrismLayout& prism, const Vec3& u, int from, int to) {
    const double s = (to > from) ? 1.0 : -1.0;
    const Vec3 v = kUp.cross(u);        // face-tangential horizontal direction
    const Vec3 plane_normal = v * -s;   // turning sense: horizontal-out to vertical
    const Vec3 p_from = u * prism.apothem + kUp * prism.mid_floor_z(from);
    const Vec3 outer = u * (prism.apothem + 1.0);

    std::vector<CurvePiece> pieces;
    pieces.push_back(arc_from_start_tangent(p_from, u, plane_normal, 1.0, kPi / 2.0));

    const Vec3 lift_start = outer + kUp * (prism.mid_floor_z(from) + s);
    const Vec3 lift_end = outer + kUp * (prism.mid_floor_z(to) - s);
    if ((lift_end - lift_start).norm() > 1e-12) {
        pieces.push_back(LineSegment{lift_start, lift_end});
    }

    pieces.push_back(arc_from_start_tangent(lift_end, kUp * s, plane_normal, 1.0, kPi / 2.0));
    return pieces;
}

// Binding piece on floor `level` from face a (arrival tangent -u_a) to face b
// (departure tangent +u_b). Tangent-matched to the radial directions; the
// unique such circle has radius apothem * tan(delta/2). Opposite faces give
// a straight diameter.
CurvePiece binding_piece(const PrismLayout& prism, int level, int face_a, int face_b) {
    const double z = prism.mid_floor_z(level);
    const Vec3 p_a = prism.face_directions[face_a] * prism.apothem + kUp * z;
    const Vec3 p_b = prism.face_directions[face_b] * prism.apothem + kUp * z;

    const int alpha = prism.alpha;
    int step = ((face_b - face_a) % alpha + alpha) % alpha;  // 1..alpha-1
    if (2 * step == alpha) {
        return LineSegment{p_a, p_b};
    }
    const int signed_step = (2 * step < alpha) ? step : step - alpha;
    const double delta = 2.0 * kPi * std::abs(signed_step) / alpha;
    const double sign = (signed_step > 0) ? 1.0 : -1.0;
    // apothem * tan(delta/2) = tan(delta/2) / tan(pi/alpha); the quotient form
    // makes the adjacent-face radius exactly 1.
    const double radius = std::tan(delta / 2.0) / std::tan(kPi / alpha);
    const Vec3 u_a = prism.face_directions[face_a];
    return arc_from_start_tangent(p_a, -u_a, kUp * -sign, radius, kPi - delta);
}

}  // namespace

double BuildResult::total_length() const {
    double sum = 0.0;
    for (const PiecewiseCurve& c : components) sum += c.length();
    return sum;
}

const PiecewiseCurve& BuildResult::curve() const {
    if (components.size() != 1) {
        throw ValidationError("multi_component",
                              "presentation builds " + std::to_string(components.size()) +
                                  " components; expected a single closed curve");
    }
    return components.front();
}

BuildResult build(const ArcPresentation& a) {
    BuildResult out;
    out.prism = layout(a);
    const PrismLayout& prism = out.prism;
    const int alpha = a.alpha();

    out.fins.reserve(alpha);
    for (int i = 0; i < alpha; ++i) {
        FinPart fin;
        fin.arc_index = i;
        fin.face = prism.arc_face[i];
        fin.pieces = fin_pieces(prism, prism.face_directions[fin.face], a.arcs[i].x, a.arcs[i].y);
        fin.length = kPi - 2.0 + 2.0 * std::abs(a.arcs[i].x - a.arcs[i].y);
        out.fins.push_back(std::move(fin));
    }

    // Walk each cycle: fin (enter level -> exit level), then the binding arc
    // on the exit floor over to the next arc's face.
    const LinkStructure structure = link_structure(a);
    std::vector<BindingPart> bindings;
    for (const std::vector<int>& cycle : structure.cycles) {
        PiecewiseCurve component;
        component.closed = true;
        int enter = a.arcs[cycle.front()].x;
        for (std::size_t k = 0; k < cycle.size(); ++k) {
            const int arc = cycle[k];
            const int exit = (a.arcs[arc].x == enter) ? a.arcs[arc].y : a.arcs[arc].x;
            const int face = prism.arc_face[arc];

            for (CurvePiece& p : fin_pieces(prism, prism.face_directions[face], enter, exit)) {
                component.pieces.push_back(std::move(p));
            }

            const int next_arc = cycle[(k + 1) % cycle.size()];
            const int next_face = prism.arc_face[next_arc];
            BindingPart binding;
            binding.level = exit;
            binding.face_a = face;
            binding.face_b = next_face;
            binding.piece = binding_piece(prism, exit, face, next_face);
            binding.length = piece_length(binding.piece);
            component.pieces.push_back(binding.piece);
            bindings.push_back(std::move(binding));

            enter = exit;
        }
        out.components.push_back(std::move(component));
    }

    std::sort(bindings.begin(), bindings.end(),
              [](const BindingPart& x, const BindingPart& y) { return x.level < y.level; });
    out.bindings = std::move(bindings);
    return out;
}

}  // namespace arcrope
