#pragma once

#include "eulertop/dynamics.hpp"
#include "eulertop/geometry.hpp"

namespace eulertop {

/// The per-orbit phase decomposition: predicted rotation angle from
/// delta_theta = 2KT/p - A/p^2 next to the angle measured directly from the
/// attitude after one period. `residual` is the circular distance between
/// the two and is the headline verification number.
struct PhaseReport {
    double p = 0.0;                      ///< momentum norm
    double K = 0.0;                      ///< kinetic energy
    double T = 0.0;                      ///< period (seconds)
    double area = 0.0;                   ///< signed enclosed area, in [0, 4 pi p^2)
    double area_complement = 0.0;        ///< area - 4 pi p^2
    double dynamical_phase = 0.0;        ///< 2KT/p (unwrapped)
    double geometric_phase = 0.0;        ///< area/p^2 (unwrapped)
    double delta_theta_formula = 0.0;    ///< mod 2 pi
    double delta_theta_measured = 0.0;   ///< mod 2 pi
    double residual = 0.0;               ///< circular distance, in [0, pi]
};

struct PeriodOptions {
    double dt = 0.0;           ///< step size; 0 = default_step(inertia, p)
    Vec3 section_normal{};     ///< test hook: transverse-section normal; zero = flow direction at P0
};

/// First return time of the momentum orbit through P0.
///
/// Scans for the first signed crossing of the transverse section through P0
/// (the plane orthogonal to the flow direction there, crossed in the flow's
/// sign) and refines the crossing time by bisection on the section coordinate
/// to about machine precision. Throws Equilibrium when P0 is an equilibrium,
/// SeparatrixTimeout when the initial energy sits within 1e-8 relative of the
/// separatrix energy p^2/(2 I2) or no return happens within max_time.
double detect_period(const Vec3& P0, const InertiaSpec& inertia, double max_time,
                     PeriodOptions options = {});

/// Signed area enclosed by a one-period orbit trajectory (which must close to
/// 1e-6 p, else OpenOrbit). The orbit samples are fed to
/// spherical_polygon_area; with `curvature_correction` (default) each
/// geodesic chord is corrected by the analytic chord-vs-arc lens area
/// kappa_g s^3 / 12, which removes the quadratic sampling bias and leaves the
/// integrator as the only error source.
SphericalArea enclosed_area(const BodyTrajectory& orbit, double p,
                            bool curvature_correction = true);

/// delta_theta = 2KT/p - A/p^2, wrapped to [0, 2 pi). The 4 pi p^2 ambiguity
/// in A drops out mod 2 pi.
double montgomery_delta_theta(double K, double T, double A, double p);

/// Rotation angle of the body about the spatial momentum direction after one
/// period, measured from the attitude: the angle of S(T) S(0)^-1 about
/// p_vector, wrapped to [0, 2 pi). Throws AxisNotFixed when the orbit did not
/// close well enough for S(T) S(0)^-1 to fix the axis.
double measured_delta_theta(const BodyTrajectory& orbit, const Vec3& p_vector);

struct PhaseOptions {
    double dt = 0.0;        ///< step size; 0 = default_step(inertia, p)
    double max_time = 0.0;  ///< period search horizon; 0 = 100 * (2 pi I2 / p)
};

/// End-to-end phase analysis of the orbit through (P0, S0): period detection,
/// one-period integration, enclosed area, and both sides of the phase formula.
PhaseReport phase_report(const Vec3& P0, const Rotation& S0, const InertiaSpec& inertia,
                         PhaseOptions options = {});

}  // namespace eulertop
