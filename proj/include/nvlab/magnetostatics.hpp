#pragma once

#include <cmath>
#include <string>
#include <utility>

#include "nvlab/constants.hpp"
#include "nvlab/errors.hpp"
#include "nvlab/vec3.hpp"

namespace nvlab {

/// The manipulated sensing target: a magnetized microbead modeled as a point
/// dipole at its center.
struct MagneticParticle {
    Vec3 position;                  // m
    double moment_magnitude = 0.0;  // A*m^2
    Vec3 moment_axis{0, 0, 1};      // unit
    double radius = 0.5e-6;         // m

    Vec3 moment() const { return moment_axis * moment_magnitude; }
};

/// Fixed fluorescence probe on the glass surface.
struct NVSensor {
    Vec3 position;                        // m
    Vec3 axis{0, 0, 1};                   // unit orientation
    double zero_field_splitting = 2.87e9; // Hz
    double linewidth_fwhm = 7.2e6;        // Hz
    double contrast_amplitude = 0.053;    // dimensionless dip depth
    double count_rate = 45e3;             // counts/s
};

/// Coil under the device, modeled as N identical coaxial loops. The standoff
/// is the distance from the coil plane to the bottom glass surface.
struct CoilMagnet {
    double loop_radius = 5e-3; // m
    int turns = 150;
    double standoff = 2e-3;    // m
    double current = 0.0;      // A
};

/// Point-dipole field (mu0/4pi) * (3 rhat (m.rhat) - m) / |r|^3 evaluated at
/// displacement `offset` from the dipole. This is the standard dipole
/// formula; the exterior field of a uniformly magnetized sphere is exactly
/// of this form.
inline Vec3 dipole_field(const Vec3& moment, const Vec3& offset) {
    const double r2 = offset.norm2();
    if (r2 == 0.0) {
        throw ValidationError("dipole_field: field evaluated at dipole location");
    }
    const double r = std::sqrt(r2);
    const Vec3 rhat = offset / r;
    const double mr = moment.dot(rhat);
    return (rhat * (3.0 * mr) - moment) * (PhysicalConstants::mu0_over_4pi / (r2 * r));
}

/// Signed projection beta . B of a field onto the sensor axis.
inline double nv_projected_field(const Vec3& field, const Vec3& axis) {
    return axis.dot(field);
}

/// m_s = 0 -> +-1 transition frequencies in the linear Zeeman regime:
/// f_- <= f_+, splitting 2*gamma*|B_parallel|.
inline std::pair<double, double> zeeman_frequencies(double b_parallel, double d0) {
    if (std::abs(b_parallel) >= 10e-3) {
        throw ValidationError("zeeman_frequencies: |B| outside linear Zeeman regime of this model");
    }
    const double shift = zeeman_gamma() * std::abs(b_parallel);
    return {d0 - shift, d0 + shift};
}

/// On-axis field of the coil at a height above the bottom glass surface,
/// B = mu0 N I a^2 / (2 (a^2+d^2)^{3/2}) with d = standoff + height.
/// Positive values point +z; the gradient pulls an aligned moment down.
inline double coil_axial_field(const CoilMagnet& coil, double height_above_glass) {
    const double d = coil.standoff + height_above_glass;
    const double a2 = coil.loop_radius * coil.loop_radius;
    const double s = a2 + d * d;
    return PhysicalConstants::mu0 * coil.turns * coil.current * a2 /
           (2.0 * s * std::sqrt(s));
}

/// Analytic d/dz of coil_axial_field. Negative: field decays away from coil.
inline double coil_axial_gradient(const CoilMagnet& coil, double height_above_glass) {
    const double d = coil.standoff + height_above_glass;
    const double a2 = coil.loop_radius * coil.loop_radius;
    const double s = a2 + d * d;
    return -3.0 * PhysicalConstants::mu0 * coil.turns * coil.current * a2 * d /
           (2.0 * s * s * std::sqrt(s));
}

} // namespace nvlab
