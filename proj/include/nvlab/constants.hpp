#pragma once

namespace nvlab {

/// Fixed CODATA values, SI units throughout.
struct PhysicalConstants {
    static constexpr double mu0_over_4pi = 1e-7;              // T*m/A
    static constexpr double mu0 = 4.0 * 3.14159265358979323846 * 1e-7;
    static constexpr double planck_h = 6.62607015e-34;        // J*s (exact)
    static constexpr double bohr_magneton = 9.2740100783e-24; // J/T
    static constexpr double lande_g = 2.0;                    // NV ground-state g-factor
    static constexpr double boltzmann_k = 1.380649e-23;       // J/K (exact)
};

/// g*muB/h, the linear Zeeman slope of one NV transition. About 28.0 GHz/T.
constexpr double zeeman_gamma() {
    return PhysicalConstants::lande_g * PhysicalConstants::bohr_magneton /
           PhysicalConstants::planck_h;
}

constexpr double pi() { return 3.14159265358979323846; }

} // namespace nvlab
