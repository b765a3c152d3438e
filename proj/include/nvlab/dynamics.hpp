#pragma once

#include <algorithm>
#include <cmath>

#include "nvlab/rng.hpp"
#include "nvlab/world.hpp"

namespace nvlab {

/// Net vertical force on the particle at height z: the upward surface push
/// F0 exp(-z/lambda) plus the (negative) magnetic gradient pull
/// m * dB/dz from the coil. Positive is upward.
inline double vertical_force(double z, const DeviceWorld& world, const MagneticParticle& particle) {
    const double surface = world.fluid.surface_force_amplitude *
                           std::exp(-z / world.fluid.surface_force_decay);
    const double magnetic = particle.moment_magnitude * coil_axial_gradient(world.coil, z);
    return surface + magnetic;
}

/// Height where the vertical force balances, found by bisection to 1 nm.
/// The surface force decays with z and the pull strengthens slightly, so the
/// force is strictly decreasing and the root unique. Returns channel_height
/// when the net force is upward everywhere (pinned under the top PDMS
/// surface) and the particle-radius clearance when it is downward at every
/// reachable height (pinned on the glass).
inline double equilibrium_height(double current, const DeviceWorld& world,
                                 const MagneticParticle& particle) {
    if (current < 0.0) {
        throw ValidationError("equilibrium_height: current must be >= 0");
    }
    DeviceWorld w = world;
    w.coil.current = current;
    double lo = particle.radius;
    double hi = w.fluid.channel_height;
    if (vertical_force(hi, w, particle) >= 0.0) return w.fluid.channel_height;
    if (vertical_force(lo, w, particle) <= 0.0) return particle.radius;
    while (hi - lo > 1e-9) {
        const double mid = 0.5 * (lo + hi);
        if (vertical_force(mid, w, particle) > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

/// One Euler-Maruyama step of the overdamped dynamics:
///   x' = x + (flow + F/drag) dt + sqrt(2 D dt) xi
/// with xi standard normal per axis. z is clamped to the wall contact range
/// [radius, channel_height - radius].
inline ParticleState step_overdamped(const ParticleState& state, const Vec3& flow_velocity,
                                     const Vec3& force, double dt, const FluidEnvironment& fluid,
                                     const MagneticParticle& particle, RandomStream& rng) {
    if (!(dt > 0.0)) {
        throw ValidationError("step_overdamped: dt must be > 0");
    }
    const double drag = stokes_drag_coefficient(fluid.viscosity, particle.radius);
    const double diff = diffusion_coefficient(fluid.temperature, drag);
    const double noise = std::sqrt(2.0 * diff * dt);

    ParticleState next;
    next.time = state.time + dt;
    const Vec3 drift = flow_velocity + force / drag;
    next.position = state.position + drift * dt;
    if (noise > 0.0) {
        next.position += Vec3{noise * rng.normal(), noise * rng.normal(), noise * rng.normal()};
    }
    next.position.z = std::clamp(next.position.z, particle.radius,
                                 fluid.channel_height - particle.radius);
    return next;
}

} // namespace nvlab
