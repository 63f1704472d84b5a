#pragma once

#include <span>
#include <vector>

#include "eulertop/dynamics.hpp"
#include "eulertop/geometry.hpp"

namespace eulertop {

// ---------------------------------------------------------------------------
// Parallel transport on the momentum sphere

/// A unit tangent vector carried along a sampled sphere curve by discrete
/// parallel transport, plus the holonomy angle picked up around a closed loop.
struct TransportedFrame {
    std::vector<Vec3> vectors;  ///< X_k, unit and tangent at each sample
    double holonomy = 0.0;      ///< signed angle from X_0 to X_end at closure, in (-pi, pi]
};

/// Transports the unit tangent vector x0 (at points.front()) along the
/// sampled curve on the sphere of radius p. Each step applies the minimal
/// rotation taking one outward normal to the next -- the discrete isometry
/// with no spin about the normal -- then restores tangency and unit norm.
///
/// The curve must close (last sample within 1e-6 p of the first) for the
/// holonomy to be defined; otherwise OpenCurve. Holonomy is positive
/// counterclockwise about the outward normal.
TransportedFrame parallel_transport(std::span<const Vec3> points, double p, const Vec3& x0);

/// Body-frame images of a fixed right-handed orthonormal inertial triple:
/// E = S^-1 e, F = S^-1 f, N = S^-1 n.
struct BodyFrameVectors {
    Vec3 E, F, N;
};
BodyFrameVectors body_frame_vectors(const Rotation& S, const Vec3& e, const Vec3& f,
                                    const Vec3& n);

// ---------------------------------------------------------------------------
// Covariant rotation rates along a trajectory

/// Per-sample covariant data for E(t) = S^-1(t) e along a trajectory.
/// The rate <Edot_tangent, F> is constant along exact solutions: -2K/p.
struct CovariantRateReport {
    std::vector<double> rates;       ///< <Edot^T, F_k> at interior samples
    std::vector<double> residuals;   ///< ‖Edot^T + (2K/p) F_k‖
    double max_residual = 0.0;
    double expected_rate = 0.0;      ///< -2K/p
};

/// Central-difference estimate of the covariant derivative of E along the
/// trajectory, compared against the constant-rate law Edot^T = -(2K/p) F.
/// {e, f, n} must be right-handed orthonormal with n the spatial momentum
/// direction of the trajectory.
CovariantRateReport covariant_rate_residual(const BodyTrajectory& traj, const Vec3& e,
                                            const Vec3& f, const Vec3& n);

/// Covariant angular rate about N of G = S^-1 g, where g co-rotates with the
/// auxiliary frame: gdot = (p/I2) n x g.
struct AuxiliaryRateReport {
    std::vector<double> rates;   ///< signed rate about N at interior samples
    double expected_rate = 0.0;  ///< p/I2 - 2K/p
};

AuxiliaryRateReport auxiliary_frame_rate(const BodyTrajectory& traj, const InertiaSpec& inertia,
                                         double p);

/// The constant p/I2 - 2K/p (zero exactly at the separatrix energy).
double auxiliary_expected_rate(const InertiaSpec& inertia, double p, double K);

}  // namespace eulertop
