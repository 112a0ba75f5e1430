#pragma once

#include <cmath>

namespace arcrope {

/// Plain 3-component double vector. All geometry in the library is stored
/// in tube-radius units, so a curve of unit thickness has tube radius 1.
struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Vec3() = default;
    constexpr Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

    constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    constexpr Vec3 operator-() const { return {-x, -y, -z}; }
    constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    constexpr Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
    Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
    Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
    Vec3& operator*=(double s) { x *= s; y *= s; z *= s; return *this; }

    constexpr double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    constexpr Vec3 cross(const Vec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    double norm() const { return std::sqrt(dot(*this)); }
    constexpr double norm2() const { return dot(*this); }
    Vec3 normalized() const { return *this / norm(); }
    double distance_to(const Vec3& o) const { return (*this - o).norm(); }
};

inline constexpr Vec3 operator*(double s, const Vec3& v) { return v * s; }

/// Rodrigues rotation of v about the unit vector axis by angle (radians).
inline Vec3 rotate_about_axis(const Vec3& v, const Vec3& axis, double angle) {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    return v * c + axis.cross(v) * s + axis * (axis.dot(v) * (1.0 - c));
}

/// Proper rigid motion: p -> R p + t with R a rotation matrix (row-major).
struct RigidMotion {
    double r[3][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    Vec3 t;

    Vec3 apply_point(const Vec3& p) const {
        return apply_vector(p) + t;
    }
    Vec3 apply_vector(const Vec3& v) const {
        return {r[0][0] * v.x + r[0][1] * v.y + r[0][2] * v.z,
                r[1][0] * v.x + r[1][1] * v.y + r[1][2] * v.z,
                r[2][0] * v.x + r[2][1] * v.y + r[2][2] * v.z};
    }

    static RigidMotion identity() { return {}; }
    static RigidMotion translation(const Vec3& t) {
        RigidMotion m;
        m.t = t;
        return m;
    }
    static RigidMotion rotation_z(double a) {
        RigidMotion m;
        const double c = std::cos(a), s = std::sin(a);
        m.r[0][0] = c; m.r[0][1] = -s;
        m.r[1][0] = s; m.r[1][1] = c;
        return m;
    }
    static RigidMotion rotation_x(double a) {
        RigidMotion m;
        const double c = std::cos(a), s = std::sin(a);
        m.r[1][1] = c; m.r[1][2] = -s;
        m.r[2][1] = s; m.r[2][2] = c;
        return m;
    }
    /// this after other: (this * other)(p) = this(other(p))
    RigidMotion compose(const RigidMotion& other) const {
        RigidMotion m;
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                m.r[i][j] = r[i][0] * other.r[0][j] + r[i][1] * other.r[1][j] + r[i][2] * other.r[2][j];
            }
        }
        m.t = apply_point(other.t);
        return m;
    }
};

}  // namespace arcrope
