#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "eulertop/geometry.hpp"

namespace eulertop {

// ---------------------------------------------------------------------------
// InertiaSpec

/// Principal moments of inertia of a rigid body.
///
/// Moments are canonicalized to descending order I1 >= I2 >= I3. When the
/// input triple is not already descending, the axis relabeling that sorts it
/// is recorded as a proper rotation (a signed permutation with det +1), so
/// vectors can be mapped between the caller's axis order and the canonical
/// frame without breaking orientation.
class InertiaSpec {
  public:
    /// Validates positivity and the triangle inequality I1 <= I2 + I3
    /// (and cyclic permutations), then canonicalizes.
    InertiaSpec(double i1, double i2, double i3);

    double I1() const { return moments_.x; }
    double I2() const { return moments_.y; }
    double I3() const { return moments_.z; }
    Vec3 moments() const { return moments_; }
    Vec3 inverse_moments() const { return {1.0 / moments_.x, 1.0 / moments_.y, 1.0 / moments_.z}; }

    /// Omega = I^-1 P, componentwise in the canonical principal frame.
    Vec3 angular_velocity(const Vec3& P) const {
        return {P.x / moments_.x, P.y / moments_.y, P.z / moments_.z};
    }

    /// True when the input triple had to be reordered.
    bool reordered() const { return reordered_; }
    /// Rotation mapping caller-frame components to canonical-frame components.
    const Rotation& frame_rotation() const { return frame_; }
    Vec3 to_canonical(const Vec3& v) const { return frame_ * v; }
    Vec3 from_canonical(const Vec3& v) const { return frame_.apply_inverse(v); }

    /// All three moments pairwise distinct within `rel_tol` relative.
    bool strictly_ordered(double rel_tol = 1e-12) const;

  private:
    Vec3 moments_;  // descending
    Rotation frame_;
    bool reordered_ = false;
};

// ---------------------------------------------------------------------------
// States and trajectories

struct BodyState {
    Vec3 P;            ///< angular momentum in the body frame
    Rotation S;        ///< attitude: body -> inertial
};

/// Time-stamped samples of a free rigid body trajectory on a uniform grid.
/// Attitudes are kept as unit quaternions internally and converted to
/// rotation matrices on access.
class BodyTrajectory {
  public:
    std::size_t size() const { return momenta_.size(); }
    std::size_t steps() const { return size() - 1; }
    double step() const { return h_; }
    double time(std::size_t k) const { return h_ * static_cast<double>(k); }

    const Vec3& momentum(std::size_t k) const { return momenta_[k]; }
    std::span<const Vec3> momenta() const { return momenta_; }
    const Quat& attitude_quat(std::size_t k) const { return attitudes_[k]; }
    Rotation attitude(std::size_t k) const { return Rotation::from_quat(attitudes_[k]); }
    /// S(t_k) P(t_k): the conserved spatial angular momentum.
    Vec3 spatial_momentum(std::size_t k) const { return attitudes_[k].rotate(momenta_[k]); }

    const InertiaSpec& inertia() const { return inertia_; }
    double momentum_norm() const { return p_; }
    double energy() const { return energy_; }

    /// Max over samples of | ‖P_k‖ - ‖P_0‖ | / ‖P_0‖.
    double momentum_norm_drift() const { return norm_drift_; }
    /// Max over samples of | K_k - K_0 | / K_0.
    double energy_drift() const { return energy_drift_; }

  private:
    friend BodyTrajectory integrate(const BodyState&, const InertiaSpec&, double, std::size_t,
                                    struct IntegrateOptions);
    explicit BodyTrajectory(const InertiaSpec& inertia) : inertia_(inertia) {}

    InertiaSpec inertia_;
    double h_ = 0.0;
    double p_ = 0.0;
    double energy_ = 0.0;
    double norm_drift_ = 0.0;
    double energy_drift_ = 0.0;
    std::vector<Vec3> momenta_;
    std::vector<Quat> attitudes_;
};

struct IntegrateOptions {
    /// Renormalize ‖P‖ to its initial value after every step. Off by default
    /// so that conservation stays a measured property of the integrator.
    bool project_momentum = false;
};

// ---------------------------------------------------------------------------
// Operations

/// Right-hand side of the Euler equation: Pdot = P x (I^-1 P).
Vec3 euler_rhs(const Vec3& P, const InertiaSpec& inertia);

/// Rotational kinetic energy K = <P, I^-1 P> / 2.
double kinetic_energy(const Vec3& P, const InertiaSpec& inertia);

/// Spatial angular velocity omega = S I^-1 P.
Vec3 spatial_angular_velocity(const BodyState& state, const InertiaSpec& inertia);

/// Step size resolving the fastest rotation scale: (2 pi I2 / p) / 20000.
double default_step(const InertiaSpec& inertia, double p);

/// Integrates the coupled system Pdot = P x Omega, Sdot = S hat(Omega) for n
/// steps of size h with a 4th-order Runge-Kutta-Munthe-Kaas scheme. Attitude
/// increments are applied through the exponential map, so every sample stays
/// orthogonal to round-off. Throws StepTooLarge when a single step moves
/// ‖P‖ or K by more than 1e-6 relative.
BodyTrajectory integrate(const BodyState& state0, const InertiaSpec& inertia, double h,
                         std::size_t n, IntegrateOptions options = {});

/// Advances (P, q) by one integrator step; shared with the period detector.
void rk_step(const InertiaSpec& inertia, double h, Vec3& P, Quat& q);

enum class Stability { center, saddle };

struct EquilibriumPoint {
    Vec3 P;
    Stability stability;
};

/// The six relative equilibria +-p e_i with their stability labels.
/// Requires strictly distinct moments (1e-12 relative), else DegenerateInertia.
std::array<EquilibriumPoint, 6> classify_equilibria(const InertiaSpec& inertia, double p);

enum class OrbitFamily { axis_e1, axis_e3 };

struct MomentumSigns {
    int s1 = +1;  ///< sign of the P1 component
    int s3 = +1;  ///< sign of the P3 component
};

/// Point on the intersection of the momentum sphere ‖P‖ = p with the energy
/// ellipsoid K(P) = K, in the P2 = 0 plane. Requires
/// p^2/(2 I1) <= K <= p^2/(2 I3); the family must match the side of the
/// separatrix energy the orbit lies on.
Vec3 momentum_from_invariants(const InertiaSpec& inertia, double p, double K, OrbitFamily family,
                              MomentumSigns signs = {});

}  // namespace eulertop
