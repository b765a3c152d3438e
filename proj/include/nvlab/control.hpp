#pragma once

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "nvlab/dynamics.hpp"

namespace nvlab {

struct TrajectoryRow {
    double time = 0.0;       // s, camera frame timestamp
    Vec3 true_position;      // m
    Vec3 measured_position;  // m (z mirrors the true value)
    Vec2 target;             // m
    std::array<double, 4> voltages{};
};

struct TrajectoryLog {
    std::vector<TrajectoryRow> rows;
};

struct HoldStats {
    double std_x = 0.0; // m, std of measured x after settling
    double std_y = 0.0;
};

struct TrajectoryRules {
    double capture_radius = 200e-9; // m
    double waypoint_timeout = 30.0; // s
    double dwell = 0.0;             // s to hold after capturing a waypoint
};

namespace detail {

inline void check_tracking(const Vec3& measured, const CameraModel& camera,
                           std::size_t frames_logged) {
    if (std::abs(measured.x) > camera.field_of_view ||
        std::abs(measured.y) > camera.field_of_view) {
        throw ExperimentError("tracking lost after " + std::to_string(frames_logged) +
                              " frames: particle left the camera field of view");
    }
}

/// One measure -> control -> actuate frame followed by the dynamics substeps
/// that fill the frame period. Voltages are zero-order-held.
inline void closed_loop_frame(ParticleState& state, const Vec2& target, const DeviceWorld& world,
                              const MagneticParticle& particle, const ControllerConfig& ctl,
                              TrajectoryLog& log, RandomStream& rng) {
    const Vec3 measured = measure_position(state.position, world.camera, rng);
    const Vec2 error{target.x - measured.x, target.y - measured.y};
    const auto volts = control_voltages(error, ctl, world.actuator);
    const Vec2 flow = flow_from_voltages(volts, world.actuator);

    log.rows.push_back({state.time, state.position, measured, target, volts});
    detail::check_tracking(measured, world.camera, log.rows.size());

    const double frame_period = 1.0 / world.camera.frame_rate;
    const int substeps = std::max(1, static_cast<int>(std::round(frame_period / ctl.substep_dt)));
    const double dt = frame_period / substeps;
    const Vec3 flow3{flow.x, flow.y, 0.0};
    for (int s = 0; s < substeps; ++s) {
        const Vec3 force{0.0, 0.0, vertical_force(state.position.z, world, particle)};
        state = step_overdamped(state, flow3, force, dt, world.fluid, particle, rng);
    }
}

} // namespace detail

/// Closed-loop hold at a fixed target. Appends every frame to `log` (partial
/// on failure) and returns the per-axis standard deviation of the measured
/// positions once the configured settle time has passed.
inline HoldStats run_hold(const Vec2& target, double duration, const DeviceWorld& world,
                          const MagneticParticle& particle, const ControllerConfig& ctl,
                          ParticleState state, TrajectoryLog& log, RandomStream& rng) {
    const double frame_period = 1.0 / world.camera.frame_rate;
    if (duration < 10.0 * frame_period) {
        throw ValidationError("run_hold: duration must cover at least 10 camera frames");
    }
    const long frames = std::lround(duration * world.camera.frame_rate);
    double sx = 0, sy = 0, sxx = 0, syy = 0;
    long n = 0;
    for (long k = 0; k < frames; ++k) {
        detail::closed_loop_frame(state, target, world, particle, ctl, log, rng);
        const auto& row = log.rows.back();
        if (row.time >= ctl.settle_time) {
            sx += row.measured_position.x;
            sy += row.measured_position.y;
            sxx += row.measured_position.x * row.measured_position.x;
            syy += row.measured_position.y * row.measured_position.y;
            ++n;
        }
    }
    HoldStats stats;
    if (n > 1) {
        stats.std_x = std::sqrt(std::max(0.0, (sxx - sx * sx / n) / (n - 1)));
        stats.std_y = std::sqrt(std::max(0.0, (syy - sy * sy / n) / (n - 1)));
    }
    return stats;
}

/// Follow a waypoint list: a waypoint counts as reached once the measured
/// position is inside the capture radius; after an optional dwell the next
/// one becomes active. Throws "waypoint timeout" naming the index if a
/// waypoint is not captured in time.
inline void run_trajectory(const std::vector<Vec2>& waypoints, const TrajectoryRules& rules,
                           const DeviceWorld& world, const MagneticParticle& particle,
                           const ControllerConfig& ctl, ParticleState state, TrajectoryLog& log,
                           RandomStream& rng) {
    const double frame_period = 1.0 / world.camera.frame_rate;
    for (std::size_t i = 0; i < waypoints.size(); ++i) {
        const Vec2& target = waypoints[i];
        double waited = 0.0;
        bool captured = false;
        // measured distance decides capture; first frame may already qualify
        while (!captured) {
            detail::closed_loop_frame(state, target, world, particle, ctl, log, rng);
            const auto& m = log.rows.back().measured_position;
            if (Vec2{m.x - target.x, m.y - target.y}.norm() <= rules.capture_radius) {
                captured = true;
                break;
            }
            waited += frame_period;
            if (waited > rules.waypoint_timeout) {
                throw ExperimentError("waypoint timeout at index " + std::to_string(i));
            }
        }
        const long dwell_frames = std::lround(rules.dwell * world.camera.frame_rate);
        for (long k = 0; k < dwell_frames; ++k) {
            detail::closed_loop_frame(state, target, world, particle, ctl, log, rng);
        }
    }
}

/// Square spiral waypoints: legs of length pitch, pitch, 2*pitch, 2*pitch,
/// 3*pitch, ... starting along +x and turning left.
inline std::vector<Vec2> square_spiral(const Vec2& center, double pitch, int legs) {
    std::vector<Vec2> points{center};
    static constexpr double dirs[4][2] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    Vec2 at = center;
    for (int k = 1; k <= legs; ++k) {
        const double len = pitch * ((k + 1) / 2);
        const auto& d = dirs[(k - 1) % 4];
        at = {at.x + d[0] * len, at.y + d[1] * len};
        points.push_back(at);
    }
    return points;
}

} // namespace nvlab
