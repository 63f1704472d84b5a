#include "eulertop/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace eulertop {

// ---------------------------------------------------------------------------
// InertiaSpec

InertiaSpec::InertiaSpec(double i1, double i2, double i3) {
    const double in[3] = {i1, i2, i3};
    for (double v : in) {
        if (!(v > 0.0) || !std::isfinite(v))
            throw InvalidInertia("principal moments must be positive finite numbers");
    }
    if (i1 > i2 + i3 || i2 > i3 + i1 || i3 > i1 + i2)
        throw InvalidInertia("principal moments violate the triangle inequality");

    int order[3] = {0, 1, 2};
    std::stable_sort(order, order + 3, [&](int a, int b) { return in[a] > in[b]; });
    moments_ = {in[order[0]], in[order[1]], in[order[2]]};
    reordered_ = !(order[0] == 0 && order[1] == 1 && order[2] == 2);

    if (reordered_) {
        // Signed permutation with det +1: rows are the canonical axes
        // expressed in the caller's frame.
        Mat3 m{{0, 0, 0, 0, 0, 0, 0, 0, 0}};
        for (int r = 0; r < 3; ++r) m(r, order[r]) = 1.0;
        if (m.det() < 0.0)
            for (int c = 0; c < 3; ++c) m(2, c) = -m(2, c);
        frame_ = Rotation::from_matrix(m);
    }
}

bool InertiaSpec::strictly_ordered(double rel_tol) const {
    const double scale = moments_.x;
    return (moments_.x - moments_.y) > rel_tol * scale &&
           (moments_.y - moments_.z) > rel_tol * scale;
}

// ---------------------------------------------------------------------------
// Basic operations

Vec3 euler_rhs(const Vec3& P, const InertiaSpec& inertia) {
    return cross(P, inertia.angular_velocity(P));
}

double kinetic_energy(const Vec3& P, const InertiaSpec& inertia) {
    return 0.5 * dot(P, inertia.angular_velocity(P));
}

Vec3 spatial_angular_velocity(const BodyState& state, const InertiaSpec& inertia) {
    return state.S * inertia.angular_velocity(state.P);
}

double default_step(const InertiaSpec& inertia, double p) {
    if (!(p > 0.0)) throw InputError("momentum norm must be positive");
    return kTwoPi * inertia.I2() / p / 20000.0;
}

// ---------------------------------------------------------------------------
// RKMK4 integrator
//
// State per macro step: (P, sigma) with sigma the rotation-vector increment,
// S_{k+1} = S_k exp(hat(sigma)). For right increments sigma satisfies
// sigmadot = Omega + (1/2) sigma x Omega + (1/12) sigma x (sigma x Omega),
// the inverse-dexp series truncated to the order the scheme needs.

namespace {

struct Deriv {
    Vec3 dP;
    Vec3 dsigma;
};

inline Deriv rhs(const InertiaSpec& inertia, const Vec3& P, const Vec3& sigma) {
    const Vec3 omega = inertia.angular_velocity(P);
    const Vec3 so = cross(sigma, omega);
    return {cross(P, omega), omega + 0.5 * so + (1.0 / 12.0) * cross(sigma, so)};
}

}  // namespace

void rk_step(const InertiaSpec& inertia, double h, Vec3& P, Quat& q) {
    const Vec3 sigma0{0, 0, 0};
    const Deriv k1 = rhs(inertia, P, sigma0);
    const Deriv k2 = rhs(inertia, P + 0.5 * h * k1.dP, 0.5 * h * k1.dsigma);
    const Deriv k3 = rhs(inertia, P + 0.5 * h * k2.dP, 0.5 * h * k2.dsigma);
    const Deriv k4 = rhs(inertia, P + h * k3.dP, h * k3.dsigma);

    P += (h / 6.0) * (k1.dP + 2.0 * k2.dP + 2.0 * k3.dP + k4.dP);
    const Vec3 sigma =
        (h / 6.0) * (k1.dsigma + 2.0 * k2.dsigma + 2.0 * k3.dsigma + k4.dsigma);
    q = (q * Quat::exp_vector(sigma)).normalized();
}

BodyTrajectory integrate(const BodyState& state0, const InertiaSpec& inertia, double h,
                         std::size_t n, IntegrateOptions options) {
    if (!(h > 0.0) || !std::isfinite(h)) throw InputError("step size must be positive");
    if (!finite(state0.P)) throw InputError("initial momentum must be finite");

    BodyTrajectory traj(inertia);
    traj.h_ = h;
    traj.p_ = norm(state0.P);
    traj.energy_ = kinetic_energy(state0.P, inertia);
    traj.momenta_.reserve(n + 1);
    traj.attitudes_.reserve(n + 1);

    Vec3 P = state0.P;
    Quat q = state0.S.to_quat();
    traj.momenta_.push_back(P);
    traj.attitudes_.push_back(q);

    const double p0 = traj.p_;
    const double K0 = traj.energy_;
    double prev_norm = p0;
    double prev_energy = K0;

    for (std::size_t k = 0; k < n; ++k) {
        rk_step(inertia, h, P, q);
        if (!finite(P)) throw NumericalFailure("momentum became non-finite during integration");

        const double pn = norm(P);
        const double Kn = kinetic_energy(P, inertia);
        if (p0 > 0.0) {
            const double step_violation =
                std::max(std::abs(pn - prev_norm) / p0,
                         K0 > 0.0 ? std::abs(Kn - prev_energy) / K0 : 0.0);
            if (step_violation > 1e-6)
                throw StepTooLarge("single-step invariant violation exceeds 1e-6 relative");
            traj.norm_drift_ = std::max(traj.norm_drift_, std::abs(pn - p0) / p0);
            if (K0 > 0.0)
                traj.energy_drift_ = std::max(traj.energy_drift_, std::abs(Kn - K0) / K0);
        }
        prev_norm = pn;
        prev_energy = Kn;

        if (options.project_momentum && pn > 0.0) P = (p0 / pn) * P;

        traj.momenta_.push_back(P);
        traj.attitudes_.push_back(q);
    }
    return traj;
}

// ---------------------------------------------------------------------------
// Equilibria and orbit seeds

std::array<EquilibriumPoint, 6> classify_equilibria(const InertiaSpec& inertia, double p) {
    if (!(p > 0.0)) throw InputError("momentum norm must be positive");
    if (!inertia.strictly_ordered())
        throw DegenerateInertia("equal principal moments: the six-point structure degenerates");
    return {{{p * kE1, Stability::center},
             {-p * kE1, Stability::center},
             {p * kE2, Stability::saddle},
             {-p * kE2, Stability::saddle},
             {p * kE3, Stability::center},
             {-p * kE3, Stability::center}}};
}

Vec3 momentum_from_invariants(const InertiaSpec& inertia, double p, double K, OrbitFamily family,
                              MomentumSigns signs) {
    if (!(p > 0.0)) throw InputError("momentum norm must be positive");
    const double Kmin = p * p / (2.0 * inertia.I1());
    const double Kmax = p * p / (2.0 * inertia.I3());
    const double slack = 1e-12 * Kmax;
    if (K < Kmin - slack || K > Kmax + slack)
        throw EnergyOutOfRange("kinetic energy is outside [p^2/(2 I1), p^2/(2 I3)]");

    if (inertia.strictly_ordered()) {
        const double Ksep = p * p / (2.0 * inertia.I2());
        if (family == OrbitFamily::axis_e1 && K > Ksep)
            throw EnergyOutOfRange("energy above the separatrix: orbit encircles e3, not e1");
        if (family == OrbitFamily::axis_e3 && K < Ksep)
            throw EnergyOutOfRange("energy below the separatrix: orbit encircles e1, not e3");
    }

    // Two-equation solve in the P2 = 0 plane:
    //   P1^2 + P3^2 = p^2,   P1^2/I1 + P3^2/I3 = 2K.
    const double inv1 = 1.0 / inertia.I1(), inv3 = 1.0 / inertia.I3();
    if (inv3 - inv1 < 1e-14 * inv3)  // spherical: every direction has energy K
        return {signs.s1 >= 0 ? p : -p, 0.0, 0.0};
    double p1sq = (p * p * inv3 - 2.0 * K) / (inv3 - inv1);
    p1sq = std::clamp(p1sq, 0.0, p * p);
    const double p3sq = p * p - p1sq;
    return {signs.s1 >= 0 ? std::sqrt(p1sq) : -std::sqrt(p1sq), 0.0,
            signs.s3 >= 0 ? std::sqrt(p3sq) : -std::sqrt(p3sq)};
}

}  // namespace eulertop
