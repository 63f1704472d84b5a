#pragma once

#include <array>
#include <cmath>
#include <span>

#include "eulertop/errors.hpp"

namespace eulertop {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// ---------------------------------------------------------------------------
// Vec3

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

constexpr Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
constexpr Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
constexpr Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }
constexpr Vec3 operator*(double s, const Vec3& a) { return {s * a.x, s * a.y, s * a.z}; }
constexpr Vec3 operator*(const Vec3& a, double s) { return s * a; }
constexpr Vec3 operator/(const Vec3& a, double s) { return {a.x / s, a.y / s, a.z / s}; }
constexpr Vec3& operator+=(Vec3& a, const Vec3& b) { a = a + b; return a; }
constexpr Vec3& operator-=(Vec3& a, const Vec3& b) { a = a - b; return a; }

constexpr double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

inline Vec3 normalized(const Vec3& a) { return a / norm(a); }

inline bool finite(const Vec3& a) {
    return std::isfinite(a.x) && std::isfinite(a.y) && std::isfinite(a.z);
}

inline constexpr Vec3 kE1{1.0, 0.0, 0.0};
inline constexpr Vec3 kE2{0.0, 1.0, 0.0};
inline constexpr Vec3 kE3{0.0, 0.0, 1.0};

// ---------------------------------------------------------------------------
// Mat3 (row-major)

struct Mat3 {
    std::array<double, 9> a{1, 0, 0, 0, 1, 0, 0, 0, 1};

    static constexpr Mat3 identity() { return {}; }

    double operator()(int r, int c) const { return a[3 * r + c]; }
    double& operator()(int r, int c) { return a[3 * r + c]; }

    Mat3 transposed() const {
        return {{a[0], a[3], a[6], a[1], a[4], a[7], a[2], a[5], a[8]}};
    }

    double det() const {
        return a[0] * (a[4] * a[8] - a[5] * a[7]) - a[1] * (a[3] * a[8] - a[5] * a[6]) +
               a[2] * (a[3] * a[7] - a[4] * a[6]);
    }
};

inline Vec3 operator*(const Mat3& m, const Vec3& v) {
    return {m.a[0] * v.x + m.a[1] * v.y + m.a[2] * v.z,
            m.a[3] * v.x + m.a[4] * v.y + m.a[5] * v.z,
            m.a[6] * v.x + m.a[7] * v.y + m.a[8] * v.z};
}

inline Mat3 operator*(const Mat3& l, const Mat3& r) {
    Mat3 out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double s = 0.0;
            for (int k = 0; k < 3; ++k) s += l(i, k) * r(k, j);
            out(i, j) = s;
        }
    return out;
}

/// Largest absolute entry of m - identity; used for orthogonality checks.
double max_abs_deviation_from_identity(const Mat3& m);

// ---------------------------------------------------------------------------
// Quaternions (scalar-first, unit quaternions represent rotations)

struct Quat {
    double w = 1.0, x = 0.0, y = 0.0, z = 0.0;

    static Quat from_axis_angle(const Vec3& unit_axis, double angle);
    /// exp of the rotation vector v (axis*angle); safe for ‖v‖ → 0.
    static Quat exp_vector(const Vec3& v);

    Quat conjugate() const { return {w, -x, -y, -z}; }
    double norm() const { return std::sqrt(w * w + x * x + y * y + z * z); }
    Quat normalized() const;
    Vec3 rotate(const Vec3& v) const;
    Mat3 to_matrix() const;
};

Quat operator*(const Quat& a, const Quat& b);

// ---------------------------------------------------------------------------
// Rotation: proper orthogonal 3x3 transform

class Rotation {
  public:
    /// Identity rotation.
    Rotation() = default;

    /// Validates orthogonality and det = +1 (1e-10 entrywise).
    static Rotation from_matrix(const Mat3& m);
    static Rotation from_quat(const Quat& q);
    /// Rodrigues rotation about a unit axis (‖axis‖ = 1 within 1e-9).
    static Rotation about_axis(const Vec3& axis, double angle);

    const Mat3& matrix() const { return m_; }
    Quat to_quat() const;

    Vec3 operator*(const Vec3& v) const { return m_ * v; }
    Rotation operator*(const Rotation& r) const { return Rotation(m_ * r.m_, unchecked{}); }
    /// Inverse = transpose.
    Rotation inverse() const { return Rotation(m_.transposed(), unchecked{}); }
    Vec3 apply_inverse(const Vec3& v) const { return m_.transposed() * v; }

  private:
    struct unchecked {};
    Rotation(const Mat3& m, unchecked) : m_(m) {}
    Mat3 m_;
};

/// Builds the rotation by `angle` (radians, right-hand rule) about `axis`.
/// Throws NonUnitAxis unless ‖axis‖ = 1 within 1e-9.
Rotation rotation_about(const Vec3& axis, double angle);

/// Signed rotation angle of R about the unit vector n, in (-pi, pi].
/// R must fix n within `tol` (default 1e-8), else AxisNotFixed.
double axis_angle_about(const Rotation& rot, const Vec3& n, double tol = 1e-8);

/// Geodesic distance on the rotation group: the angle of r1^-1 * r2, in [0, pi].
double rotation_distance(const Rotation& r1, const Rotation& r2);

// ---------------------------------------------------------------------------
// hat: R^3 -> so(3), hat(omega) v = omega x v

struct SkewMatrix {
    Vec3 omega;  // the preimage under hat

    Vec3 operator*(const Vec3& v) const { return cross(omega, v); }
    Mat3 dense() const {
        return {{0.0, -omega.z, omega.y, omega.z, 0.0, -omega.x, -omega.y, omega.x, 0.0}};
    }
};

constexpr SkewMatrix hat(const Vec3& omega) { return {omega}; }
constexpr Vec3 vee(const SkewMatrix& s) { return s.omega; }

// ---------------------------------------------------------------------------
// Signed spherical polygon area

/// Area of a spherical polygon on the sphere of radius p.
/// `area` is the canonical representative in [0, 4*pi*p^2); `complement` is
/// area - 4*pi*p^2. The two differ by the full sphere and describe the same
/// loop with the two possible choices of enclosed region.
struct SphericalArea {
    double area = 0.0;
    double complement = 0.0;
};

/// Signed area of the spherical polygon with the given ordered vertices
/// (each ‖v‖ = p within 1e-6 p). Positive when the enclosed region lies to the
/// left of travel as seen along the outward normal. The polygon closes from
/// the last vertex back to the first.
///
/// The polygon is fanned into spherical triangles from its (projected)
/// centroid and the signed triangle excesses are accumulated with the
/// two-argument arctangent form of the solid-angle formula, which stays
/// stable for the thin triangles produced by dense orbit sampling.
SphericalArea spherical_polygon_area(std::span<const Vec3> vertices, double p);

// ---------------------------------------------------------------------------
// Angle helpers

/// Wraps into [0, 2*pi).
double wrap_two_pi(double angle);
/// Wraps into (-pi, pi].
double wrap_pi(double angle);
/// Minimum circular distance between two angles, in [0, pi].
double circular_distance(double a, double b);

/// Deterministic right-handed orthonormal completion {e, f, n} of a unit n.
struct TangentBasis {
    Vec3 e, f, n;
};
TangentBasis make_tangent_basis(const Vec3& unit_n);

}  // namespace eulertop
