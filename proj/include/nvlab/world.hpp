#pragma once

#include "nvlab/actuation.hpp"
#include "nvlab/fluid.hpp"
#include "nvlab/magnetostatics.hpp"

namespace nvlab {

/// The simulated apparatus: channel plus fluid, the coil under the device,
/// the electrode actuation and the tracking camera.
struct DeviceWorld {
    FluidEnvironment fluid;
    CoilMagnet coil;
    ElectrodeActuator actuator = ElectrodeActuator::push_pull(1e-6);
    CameraModel camera;
};

} // namespace nvlab
