#pragma once

#include <cmath>

#include "nvlab/constants.hpp"
#include "nvlab/vec3.hpp"

namespace nvlab {

/// Viscous channel filling. The surface force F0*exp(-z/lambda) is the
/// phenomenological upward push that confines particles against the coil
/// pull; it decays away from the bottom glass surface.
struct FluidEnvironment {
    double viscosity = 0.05;               // Pa*s, ~50x water
    double temperature = 298.0;            // K
    double channel_height = 10e-6;         // m
    double surface_force_amplitude = 3.155e-14; // N, calibrated (see docs)
    double surface_force_decay = 3e-6;     // m
};

struct ParticleState {
    Vec3 position; // m, z up from the bottom glass surface
    double time = 0.0;
};

/// Stokes law, 6 pi eta R.
inline double stokes_drag_coefficient(double viscosity, double radius) {
    return 6.0 * pi() * viscosity * radius;
}

/// Stokes-Einstein, D = kB T / drag.
inline double diffusion_coefficient(double temperature, double drag) {
    return PhysicalConstants::boltzmann_k * temperature / drag;
}

} // namespace nvlab
