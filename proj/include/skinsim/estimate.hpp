#pragma once

#include "skinsim/calibrate.hpp"
#include "skinsim/mechanics.hpp"
#include "skinsim/optics.hpp"

namespace skinsim {

struct ForceEstimate {
    double force_n = 0.0;
    bool underrange = false; ///< voltage above the rest-gap level, no contact
};

/// Inverse pipeline: voltage -> optical gap -> indentation (bisection on the
/// monotone gap curve to |gap error| < 1e-9 mm) -> quasi-static force.
/// Voltages above the rest-gap voltage map to 0 N with the underrange flag
/// (baseline noise); voltages below the model image raise RangeError.
/// The final force map is the static one: the configured contact dead zone
/// is an optical-onset effect and is not re-applied to the solved indent.
ForceEstimate force_from_voltage(double voltage_v, const SensorGeometry& geom,
                                 const MaterialParams& mat, const OpticalModel& model);

/// Inverts a monotone calibration curve by bisection over its force domain
/// to 1e-9 V. Outputs outside the curve's image raise RangeError.
double force_from_curve(double output_v, const CalibrationCurve& curve);

} // namespace skinsim
