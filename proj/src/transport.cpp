#include "eulertop/transport.hpp"

#include <cmath>

namespace eulertop {

namespace {

// Minimal rotation taking unit vector a to unit vector b, applied to x.
Vec3 rotate_minimally(const Vec3& a, const Vec3& b, const Vec3& x) {
    const Vec3 axis = cross(a, b);
    const double s = norm(axis);
    const double c = dot(a, b);
    if (s < 1e-300) return x;  // coincident normals
    const Vec3 u = axis / s;
    const double angle = std::atan2(s, c);
    const double ca = std::cos(angle), sa = std::sin(angle);
    return ca * x + sa * cross(u, x) + (1.0 - ca) * dot(u, x) * u;
}

}  // namespace

TransportedFrame parallel_transport(std::span<const Vec3> points, double p, const Vec3& x0) {
    if (points.size() < 2) throw InputError("need at least two samples to transport along");
    if (!(p > 0.0)) throw InputError("sphere radius must be positive");

    const Vec3 n0 = points.front() / p;
    if (std::abs(norm(x0) - 1.0) > 1e-9)
        throw NonTangentSeed("seed vector is not unit length");
    if (std::abs(dot(x0, n0)) > 1e-9)
        throw NonTangentSeed("seed vector is not tangent at the first sample");

    TransportedFrame out;
    out.vectors.reserve(points.size());
    Vec3 x = normalized(x0 - dot(x0, n0) * n0);
    out.vectors.push_back(x);

    Vec3 prev_n = n0;
    for (std::size_t k = 1; k < points.size(); ++k) {
        const Vec3 nk = points[k] / p;
        x = rotate_minimally(prev_n, nk, x);
        x = normalized(x - dot(x, nk) * nk);  // re-pin tangency each step
        out.vectors.push_back(x);
        prev_n = nk;
    }

    if (norm(points.back() - points.front()) > 1e-6 * p)
        throw OpenCurve("curve does not close; holonomy undefined");
    out.holonomy = std::atan2(dot(n0, cross(out.vectors.front(), x)), dot(out.vectors.front(), x));
    return out;
}

BodyFrameVectors body_frame_vectors(const Rotation& S, const Vec3& e, const Vec3& f,
                                    const Vec3& n) {
    const double tol = 1e-9;
    if (std::abs(norm(e) - 1.0) > tol || std::abs(norm(f) - 1.0) > tol ||
        std::abs(norm(n) - 1.0) > tol || std::abs(dot(e, f)) > tol ||
        std::abs(dot(f, n)) > tol || std::abs(dot(n, e)) > tol)
        throw BasisNotOrthonormal("{e, f, n} is not orthonormal");
    if (norm(cross(e, f) - n) > 1e-8)
        throw BasisNotOrthonormal("{e, f, n} is not right-handed");
    return {S.apply_inverse(e), S.apply_inverse(f), S.apply_inverse(n)};
}

CovariantRateReport covariant_rate_residual(const BodyTrajectory& traj, const Vec3& e,
                                            const Vec3& f, const Vec3& n) {
    const std::size_t m = traj.size();
    if (m < 3) throw InputError("trajectory too short for central differences");

    const double p = traj.momentum_norm();
    const double K = traj.energy();
    const double h = traj.step();
    body_frame_vectors(traj.attitude(0), e, f, n);  // validates the triple
    if (norm(normalized(traj.spatial_momentum(0)) - n) > 1e-6)
        throw BasisNotOrthonormal("n must be the spatial momentum direction");

    CovariantRateReport out;
    out.expected_rate = -2.0 * K / p;
    out.rates.reserve(m - 2);
    out.residuals.reserve(m - 2);

    // E_k = S_k^-1 e computed via the conjugate quaternion.
    std::vector<Vec3> E(m), F(m);
    for (std::size_t k = 0; k < m; ++k) {
        const Quat qc = traj.attitude_quat(k).conjugate();
        E[k] = qc.rotate(e);
        F[k] = qc.rotate(f);
    }

    for (std::size_t k = 1; k + 1 < m; ++k) {
        const Vec3 nk = traj.momentum(k) / p;
        const Vec3 dE = (E[k + 1] - E[k - 1]) / (2.0 * h);
        const Vec3 dE_t = dE - dot(dE, nk) * nk;
        out.rates.push_back(dot(dE_t, F[k]));
        const double res = norm(dE_t + (2.0 * K / p) * F[k]);
        out.residuals.push_back(res);
        out.max_residual = std::max(out.max_residual, res);
    }
    return out;
}

double auxiliary_expected_rate(const InertiaSpec& inertia, double p, double K) {
    return p / inertia.I2() - 2.0 * K / p;
}

AuxiliaryRateReport auxiliary_frame_rate(const BodyTrajectory& traj, const InertiaSpec& inertia,
                                         double p) {
    const std::size_t m = traj.size();
    if (m < 3) throw InputError("trajectory too short for central differences");
    const double K = traj.energy();
    const double h = traj.step();

    // Auxiliary frame: g co-rotates about the spatial momentum direction at
    // rate p/I2, seeded with a deterministic tangent basis.
    const Vec3 n_hat = normalized(traj.spatial_momentum(0));
    const Vec3 g0 = make_tangent_basis(n_hat).e;
    const double mu = p / inertia.I2();

    std::vector<Vec3> G(m);
    for (std::size_t k = 0; k < m; ++k) {
        const Vec3 gk = Quat::from_axis_angle(n_hat, mu * traj.time(k)).rotate(g0);
        G[k] = traj.attitude_quat(k).conjugate().rotate(gk);
    }

    AuxiliaryRateReport out;
    out.expected_rate = auxiliary_expected_rate(inertia, p, K);
    out.rates.reserve(m - 2);
    for (std::size_t k = 1; k + 1 < m; ++k) {
        const Vec3 nk = traj.momentum(k) / p;
        const Vec3 dG = (G[k + 1] - G[k - 1]) / (2.0 * h);
        const Vec3 dG_t = dG - dot(dG, nk) * nk;
        out.rates.push_back(dot(dG_t, cross(nk, G[k])));
    }
    return out;
}

}  // namespace eulertop
