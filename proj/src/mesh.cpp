#include "arcrope/mesh.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <utility>

#include "arcrope/errors.hpp"

namespace arcrope {

namespace {

constexpr double kPi = std::numbers::pi;

// Double-reflection transport of the frame vector r from (x0, t0) to (x1, t1).
Vec3 propagate_frame(const Vec3& r, const Vec3& x0, const Vec3& t0, const Vec3& x1,
                     const Vec3& t1) {
    const Vec3 v1 = x1 - x0;
    const double c1 = v1.norm2();
    if (c1 < 1e-24) return r;
    const Vec3 rl = r - v1 * (2.0 / c1 * v1.dot(r));
    const Vec3 tl = t0 - v1 * (2.0 / c1 * v1.dot(t0));
    const Vec3 v2 = t1 - tl;
    const double c2 = v2.norm2();
    if (c2 < 1e-24) return rl;
    return rl - v2 * (2.0 / c2 * v2.dot(rl));
}

Vec3 any_perpendicular(const Vec3& t) {
    const Vec3 trial = std::fabs(t.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
    return t.cross(trial).normalized();
}

}  // namespace

TubeMesh sweep_tube(const PiecewiseCurve& c, int segments, double radius, double density) {
    if (segments < 6) {
        throw ValidationError("bad_parameter", "tube cross-section needs at least 6 segments");
    }
    if (radius <= 0.0) {
        throw ValidationError("bad_parameter", "tube radius must be positive");
    }
    if (radius > 1.0) {
        throw ValidationError("radius_too_large",
                              "tube radius exceeds the unit thickness of the construction");
    }

    std::vector<SamplePoint> pts = sample(c, density);
    // Drop coincident consecutive samples so no ring collapses.
    std::vector<SamplePoint> rings;
    rings.reserve(pts.size());
    for (const SamplePoint& p : pts) {
        if (rings.empty() || (p.position - rings.back().position).norm() > 1e-12) {
            rings.push_back(p);
        }
    }
    if (c.closed && rings.size() > 1 &&
        (rings.back().position - rings.front().position).norm() < 1e-12) {
        rings.pop_back();
    }
    const std::size_t n = rings.size();
    if (n < 2) {
        throw ValidationError("bad_parameter", "curve too short to sweep");
    }

    // Rotation-minimizing frames, then a uniform corrective twist so the
    // transported frame returns to itself around a closed loop.
    std::vector<Vec3> frames(n);
    frames[0] = any_perpendicular(rings[0].tangent);
    for (std::size_t i = 1; i < n; ++i) {
        frames[i] = propagate_frame(frames[i - 1], rings[i - 1].position, rings[i - 1].tangent,
                                    rings[i].position, rings[i].tangent);
    }
    if (c.closed) {
        const Vec3 returned = propagate_frame(frames[n - 1], rings[n - 1].position,
                                              rings[n - 1].tangent, rings[0].position,
                                              rings[0].tangent);
        const double twist = std::atan2(returned.cross(frames[0]).dot(rings[0].tangent),
                                        returned.dot(frames[0]));
        const double total = c.length();
        for (std::size_t i = 1; i < n; ++i) {
            frames[i] = rotate_about_axis(frames[i], rings[i].tangent,
                                          twist * rings[i].arclength / total);
        }
    }

    TubeMesh mesh;
    mesh.vertices.reserve(n * segments);
    for (std::size_t i = 0; i < n; ++i) {
        const Vec3 u = frames[i].normalized();
        const Vec3 v = rings[i].tangent.cross(u);
        for (int k = 0; k < segments; ++k) {
            const double phi = 2.0 * kPi * k / segments;
            mesh.vertices.push_back(rings[i].position +
                                    (u * std::cos(phi) + v * std::sin(phi)) * radius);
        }
    }

    const std::size_t bands = c.closed ? n : n - 1;
    mesh.faces.reserve(bands * segments * 2);
    for (std::size_t i = 0; i < bands; ++i) {
        const int a = static_cast<int>(i) * segments;
        const int b = static_cast<int>((i + 1) % n) * segments;
        for (int k = 0; k < segments; ++k) {
            const int k1 = (k + 1) % segments;
            mesh.faces.push_back({a + k, b + k, b + k1});
            mesh.faces.push_back({a + k, b + k1, a + k1});
        }
    }
    return mesh;
}

std::string to_obj(const TubeMesh& mesh) {
    std::string out;
    out.reserve(mesh.vertices.size() * 40 + mesh.faces.size() * 20);
    char buf[96];
    for (const Vec3& v : mesh.vertices) {
        std::snprintf(buf, sizeof(buf), "v %.9g %.9g %.9g\n", v.x, v.y, v.z);
        out += buf;
    }
    for (const auto& f : mesh.faces) {
        std::snprintf(buf, sizeof(buf), "f %d %d %d\n", f[0] + 1, f[1] + 1, f[2] + 1);
        out += buf;
    }
    return out;
}

bool is_watertight(const TubeMesh& mesh) {
    std::map<std::pair<int, int>, int> edge_count;
    for (const auto& f : mesh.faces) {
        if (f[0] == f[1] || f[1] == f[2] || f[0] == f[2]) return false;
        for (int e = 0; e < 3; ++e) {
            const int a = f[e], b = f[(e + 1) % 3];
            ++edge_count[{std::min(a, b), std::max(a, b)}];
        }
    }
    for (const auto& [edge, count] : edge_count) {
        if (count != 2) return false;
    }
    return !mesh.faces.empty();
}

}  // namespace arcrope
