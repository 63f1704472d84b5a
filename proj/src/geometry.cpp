#include "eulertop/geometry.hpp"

#include <algorithm>
#include <vector>

namespace eulertop {

double max_abs_deviation_from_identity(const Mat3& m) {
    double worst = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            worst = std::max(worst, std::abs(m(i, j) - (i == j ? 1.0 : 0.0)));
    return worst;
}

// ---------------------------------------------------------------------------
// Quat

Quat Quat::from_axis_angle(const Vec3& unit_axis, double angle) {
    const double half = 0.5 * angle;
    const double s = std::sin(half);
    return {std::cos(half), s * unit_axis.x, s * unit_axis.y, s * unit_axis.z};
}

Quat Quat::exp_vector(const Vec3& v) {
    const double theta2 = dot(v, v);
    // sin(theta/2)/theta, with the series taking over below sqrt(eps)
    double k;
    if (theta2 < 1e-16) {
        k = 0.5 - theta2 / 48.0;
    } else {
        const double theta = std::sqrt(theta2);
        k = std::sin(0.5 * theta) / theta;
    }
    return {std::cos(0.5 * std::sqrt(theta2)), k * v.x, k * v.y, k * v.z};
}

Quat Quat::normalized() const {
    const double n = norm();
    return {w / n, x / n, y / n, z / n};
}

Quat operator*(const Quat& a, const Quat& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

Vec3 Quat::rotate(const Vec3& v) const {
    // q v q^-1 via the expanded cross-product form
    const Vec3 u{x, y, z};
    const Vec3 t = 2.0 * cross(u, v);
    return v + w * t + cross(u, t);
}

Mat3 Quat::to_matrix() const {
    const double xx = x * x, yy = y * y, zz = z * z;
    const double xy = x * y, xz = x * z, yz = y * z;
    const double wx = w * x, wy = w * y, wz = w * z;
    return {{1 - 2 * (yy + zz), 2 * (xy - wz), 2 * (xz + wy),
             2 * (xy + wz), 1 - 2 * (xx + zz), 2 * (yz - wx),
             2 * (xz - wy), 2 * (yz + wx), 1 - 2 * (xx + yy)}};
}

// ---------------------------------------------------------------------------
// Rotation

Rotation Rotation::from_matrix(const Mat3& m) {
    const Mat3 gram = m.transposed() * m;
    if (max_abs_deviation_from_identity(gram) > 1e-10)
        throw InvalidRotation("matrix is not orthogonal within 1e-10");
    if (std::abs(m.det() - 1.0) > 1e-10)
        throw InvalidRotation("matrix determinant is not +1 within 1e-10");
    Rotation r;
    r.m_ = m;
    return r;
}

Rotation Rotation::from_quat(const Quat& q) {
    Rotation r;
    r.m_ = q.normalized().to_matrix();
    return r;
}

Rotation Rotation::about_axis(const Vec3& axis, double angle) {
    if (std::abs(norm(axis) - 1.0) > 1e-9) throw NonUnitAxis();
    const double c = std::cos(angle), s = std::sin(angle), t = 1.0 - c;
    const Vec3& u = axis;
    Rotation r;
    r.m_ = Mat3{{t * u.x * u.x + c, t * u.x * u.y - s * u.z, t * u.x * u.z + s * u.y,
                 t * u.x * u.y + s * u.z, t * u.y * u.y + c, t * u.y * u.z - s * u.x,
                 t * u.x * u.z - s * u.y, t * u.y * u.z + s * u.x, t * u.z * u.z + c}};
    return r;
}

// Shepperd's method: pick the largest of the four candidate pivots.
Quat Rotation::to_quat() const {
    const Mat3& m = m_;
    const double tr = m(0, 0) + m(1, 1) + m(2, 2);
    Quat q;
    if (tr > 0.0) {
        double s = std::sqrt(tr + 1.0) * 2.0;
        q = {0.25 * s, (m(2, 1) - m(1, 2)) / s, (m(0, 2) - m(2, 0)) / s,
             (m(1, 0) - m(0, 1)) / s};
    } else if (m(0, 0) > m(1, 1) && m(0, 0) > m(2, 2)) {
        double s = std::sqrt(1.0 + m(0, 0) - m(1, 1) - m(2, 2)) * 2.0;
        q = {(m(2, 1) - m(1, 2)) / s, 0.25 * s, (m(0, 1) + m(1, 0)) / s,
             (m(0, 2) + m(2, 0)) / s};
    } else if (m(1, 1) > m(2, 2)) {
        double s = std::sqrt(1.0 + m(1, 1) - m(0, 0) - m(2, 2)) * 2.0;
        q = {(m(0, 2) - m(2, 0)) / s, (m(0, 1) + m(1, 0)) / s, 0.25 * s,
             (m(1, 2) + m(2, 1)) / s};
    } else {
        double s = std::sqrt(1.0 + m(2, 2) - m(0, 0) - m(1, 1)) * 2.0;
        q = {(m(1, 0) - m(0, 1)) / s, (m(0, 2) + m(2, 0)) / s, (m(1, 2) + m(2, 1)) / s,
             0.25 * s};
    }
    if (q.w < 0.0) q = {-q.w, -q.x, -q.y, -q.z};
    return q.normalized();
}

Rotation rotation_about(const Vec3& axis, double angle) {
    return Rotation::about_axis(axis, angle);
}

double axis_angle_about(const Rotation& rot, const Vec3& n, double tol) {
    const Vec3 nn = normalized(n);
    if (norm(rot * nn - nn) > tol)
        throw AxisNotFixed("rotation does not fix the requested axis");
    // Angle read off from the image of any unit vector orthogonal to n.
    const Vec3 u = make_tangent_basis(nn).e;
    const Vec3 v = rot * u;
    const double angle = std::atan2(dot(nn, cross(u, v)), dot(u, v));
    return angle <= -kPi ? kPi : angle;
}

double rotation_distance(const Rotation& r1, const Rotation& r2) {
    const Quat q = (r1.inverse() * r2).to_quat();
    const double s = std::sqrt(q.x * q.x + q.y * q.y + q.z * q.z);
    return 2.0 * std::atan2(s, std::abs(q.w));
}

// ---------------------------------------------------------------------------
// Spherical polygon area

namespace {

// Signed solid angle of the spherical triangle (a, b, c), unit vectors.
double triangle_solid_angle(const Vec3& a, const Vec3& b, const Vec3& c) {
    const double num = dot(a, cross(b, c));
    const double den = 1.0 + dot(a, b) + dot(b, c) + dot(c, a);
    return 2.0 * std::atan2(num, den);
}

bool usable_apex(const Vec3& apex, std::span<const Vec3> unit_verts) {
    for (const Vec3& u : unit_verts)
        if (norm(u + apex) < 1e-9) return false;  // antipodal to a vertex
    return true;
}

}  // namespace

SphericalArea spherical_polygon_area(std::span<const Vec3> vertices, double p) {
    if (!(p > 0.0)) throw InputError("sphere radius must be positive");

    // Normalize onto the unit sphere, collapsing consecutive duplicates.
    std::vector<Vec3> u;
    u.reserve(vertices.size());
    for (const Vec3& v : vertices) {
        if (std::abs(norm(v) - p) > 1e-6 * p)
            throw InputError("polygon vertex is not on the sphere of radius p");
        const Vec3 un = v / p;
        if (!u.empty() && norm(un - u.back()) < 1e-14) continue;
        u.push_back(un);
    }
    if (u.size() >= 2 && norm(u.front() - u.back()) < 1e-14) u.pop_back();
    if (u.size() < 3) throw DegeneratePolygon("fewer than 3 distinct vertices");

    const std::size_t n = u.size();
    for (std::size_t k = 0; k < n; ++k) {
        if (norm(u[k] + u[(k + 1) % n]) < 1e-6)
            throw AntipodalEdge("consecutive vertices are antipodal");
    }

    // Fan apex: centroid direction, falling back to the loop axis when the
    // centroid is ill-defined (e.g. a near-great-circle loop).
    Vec3 apex;
    bool have_apex = false;
    Vec3 centroid{0, 0, 0};
    for (const Vec3& v : u) centroid += v;
    if (norm(centroid) > 1e-8 * static_cast<double>(n)) {
        apex = normalized(centroid);
        have_apex = usable_apex(apex, u);
    }
    if (!have_apex) {
        Vec3 axis{0, 0, 0};
        for (std::size_t k = 0; k < n; ++k) axis += cross(u[k], u[(k + 1) % n]);
        if (norm(axis) < 1e-12) throw DegeneratePolygon("polygon has no usable fan apex");
        apex = normalized(axis);
        if (!usable_apex(apex, u)) throw DegeneratePolygon("polygon has no usable fan apex");
    }

    double omega = 0.0;
    for (std::size_t k = 0; k < n; ++k) omega += triangle_solid_angle(apex, u[k], u[(k + 1) % n]);

    double area = std::fmod(omega, 2.0 * kTwoPi) * p * p;
    if (area < 0.0) area += 2.0 * kTwoPi * p * p;
    return {area, area - 2.0 * kTwoPi * p * p};
}

// ---------------------------------------------------------------------------
// Angle helpers

double wrap_two_pi(double angle) {
    double a = std::fmod(angle, kTwoPi);
    if (a < 0.0) a += kTwoPi;
    return a;
}

double wrap_pi(double angle) {
    const double a = wrap_two_pi(angle);
    return a > kPi ? a - kTwoPi : a;
}

double circular_distance(double a, double b) {
    const double d = std::abs(wrap_pi(a - b));
    return d;
}

TangentBasis make_tangent_basis(const Vec3& unit_n) {
    // Seed with the coordinate axis least aligned with n.
    const double ax = std::abs(unit_n.x), ay = std::abs(unit_n.y), az = std::abs(unit_n.z);
    Vec3 seed = kE1;
    if (ay <= ax && ay <= az)
        seed = kE2;
    else if (az <= ax && az <= ay)
        seed = kE3;
    const Vec3 e = normalized(seed - dot(seed, unit_n) * unit_n);
    const Vec3 f = cross(unit_n, e);
    return {e, f, unit_n};
}

}  // namespace eulertop
