#pragma once

#include <array>
#include <cmath>

#include "nvlab/errors.hpp"
#include "nvlab/rng.hpp"
#include "nvlab/vec3.hpp"

namespace nvlab {

struct CameraModel {
    double frame_rate = 10.0;              // Hz
    double localization_noise_sigma = 10e-9; // m per axis
    double field_of_view = 50e-6;          // m, half-width of trackable region
};

/// Maps the four channel-end voltages to an in-plane electroosmotic flow
/// velocity, v = G V. G is 2x4 in (m/s)/V and must have rank 2.
struct ElectrodeActuator {
    std::array<std::array<double, 4>, 2> gain{}; // (m/s)/V
    double voltage_limit = 10.0;                 // V

    /// Default push-pull pairing: channels (1,3) drive x, (2,4) drive y.
    static ElectrodeActuator push_pull(double gain_m_per_s_per_volt) {
        ElectrodeActuator a;
        const double g = gain_m_per_s_per_volt;
        a.gain = {{{g, 0.0, -g, 0.0}, {0.0, g, 0.0, -g}}};
        return a;
    }
};

struct ControllerConfig {
    double proportional_gain = 5.0;     // 1/s
    double max_commanded_speed = 10e-6; // m/s
    double substep_dt = 1e-3;           // s, dynamics step inside a frame
    double settle_time = 2.0;           // s excluded from hold statistics
};

namespace detail {
/// G G^T with its determinant, shared by the rank check and the min-norm solve.
struct Gram2 {
    double a, b, c, d; // [[a,b],[c,d]]
    double det;
};

inline Gram2 gram(const ElectrodeActuator& act) {
    const auto& g = act.gain;
    Gram2 m{};
    m.a = g[0][0] * g[0][0] + g[0][1] * g[0][1] + g[0][2] * g[0][2] + g[0][3] * g[0][3];
    m.b = g[0][0] * g[1][0] + g[0][1] * g[1][1] + g[0][2] * g[1][2] + g[0][3] * g[1][3];
    m.c = m.b;
    m.d = g[1][0] * g[1][0] + g[1][1] * g[1][1] + g[1][2] * g[1][2] + g[1][3] * g[1][3];
    m.det = m.a * m.d - m.b * m.c;
    return m;
}
} // namespace detail

/// Rank-2 check, done once at configuration time.
inline void validate_actuator(const ElectrodeActuator& act) {
    const auto m = detail::gram(act);
    const double scale = std::max(m.a, m.d);
    if (scale <= 0.0 || m.det <= 1e-12 * scale * scale) {
        throw ValidationError("actuator.gain_matrix: must have rank 2");
    }
    if (!(act.voltage_limit > 0.0)) {
        throw ValidationError("actuator.voltage_limit_V: must be > 0");
    }
}

/// Camera measurement: true xy plus independent Gaussian noise per axis.
/// z passes through unchanged (in-plane imaging only). Never mutates state.
inline Vec3 measure_position(const Vec3& true_pos, const CameraModel& camera, RandomStream& rng) {
    if (camera.localization_noise_sigma == 0.0) return true_pos;
    return {true_pos.x + rng.normal(0.0, camera.localization_noise_sigma),
            true_pos.y + rng.normal(0.0, camera.localization_noise_sigma), true_pos.z};
}

/// Proportional law: v_des = Kp * error clamped to the max commanded speed,
/// then the minimum-norm voltage solution of G V = v_des, with each component
/// clipped to +-voltage_limit.
inline std::array<double, 4> control_voltages(const Vec2& error, const ControllerConfig& ctl,
                                              const ElectrodeActuator& act) {
    Vec2 v{ctl.proportional_gain * error.x, ctl.proportional_gain * error.y};
    const double speed = v.norm();
    if (speed > ctl.max_commanded_speed) {
        v = v * (ctl.max_commanded_speed / speed);
    }
    // V = G^T (G G^T)^{-1} v
    const auto m = detail::gram(act);
    const double wx = (m.d * v.x - m.b * v.y) / m.det;
    const double wy = (-m.c * v.x + m.a * v.y) / m.det;
    std::array<double, 4> volts{};
    for (int i = 0; i < 4; ++i) {
        double vi = act.gain[0][i] * wx + act.gain[1][i] * wy;
        if (vi > act.voltage_limit) vi = act.voltage_limit;
        if (vi < -act.voltage_limit) vi = -act.voltage_limit;
        volts[i] = vi;
    }
    return volts;
}

/// Instantaneous flow v = G V; quasi-static at camera frame rates.
inline Vec2 flow_from_voltages(const std::array<double, 4>& volts, const ElectrodeActuator& act) {
    Vec2 v{0, 0};
    for (int i = 0; i < 4; ++i) {
        v.x += act.gain[0][i] * volts[i];
        v.y += act.gain[1][i] * volts[i];
    }
    return v;
}

} // namespace nvlab
