#include "skinsim/estimate.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "skinsim/errors.hpp"

namespace skinsim {

namespace {

double gap_at_indent(double indent_mm, const SensorGeometry& geom) {
    const double lambda = (geom.height_mm - indent_mm) / geom.height_mm;
    return geom.gap0_mm - geom.kappa * (geom.width_mm / 2.0) * (1.0 / std::sqrt(lambda) - 1.0);
}

// Largest indentation before the bulge would close the gap entirely.
double saturation_indent(const SensorGeometry& geom) {
    const double lam_t = 1.0 + geom.gap0_mm / (geom.kappa * geom.width_mm / 2.0);
    const double lam = 1.0 / (lam_t * lam_t);
    return geom.height_mm * (1.0 - lam);
}

} // namespace

ForceEstimate force_from_voltage(double voltage_v, const SensorGeometry& geom,
                                 const MaterialParams& mat, const OpticalModel& model) {
    if (voltage_v < model.v_min())
        throw RangeError("voltage " + std::to_string(voltage_v) +
                         " V below the optical model image");

    const double rest_gap = std::min(geom.gap0_mm, model.x_max());
    const double rest_v = model.interpolate(rest_gap);
    if (voltage_v > rest_v)
        return {0.0, true};

    const double target_gap = gap_at_voltage(voltage_v, model);
    if (target_gap >= geom.gap0_mm)
        return {0.0, target_gap > geom.gap0_mm};

    double lo = 0.0;
    double hi = std::min(saturation_indent(geom), geom.height_mm) * (1.0 - 1e-12);
    double mid = lo;
    for (int it = 0; it < 200; ++it) {
        mid = 0.5 * (lo + hi);
        const double g = gap_at_indent(mid, geom);
        if (std::fabs(g - target_gap) < 1e-9)
            break;
        if (g > target_gap)
            lo = mid;
        else
            hi = mid;
    }

    MaterialParams static_mat = mat;
    static_mat.deadzone_mm = 0.0;
    return {axial_force(mid, 0.0, geom, static_mat), false};
}

double force_from_curve(double output_v, const CalibrationCurve& curve) {
    if (!curve.monotone)
        throw ParameterError("calibration curve is not monotone over its domain");
    const double v_lo = curve.evaluate(curve.force_min_n);
    const double v_hi = curve.evaluate(curve.force_max_n);
    if (output_v < v_lo || output_v > v_hi)
        throw RangeError("output " + std::to_string(output_v) +
                         " V outside the curve image [" + std::to_string(v_lo) + ", " +
                         std::to_string(v_hi) + "]");

    double lo = curve.force_min_n, hi = curve.force_max_n;
    double mid = lo;
    for (int it = 0; it < 200; ++it) {
        mid = 0.5 * (lo + hi);
        const double v = curve.evaluate(mid);
        if (std::fabs(v - output_v) < 1e-9)
            break;
        if (v < output_v)
            lo = mid;
        else
            hi = mid;
    }
    return mid;
}

} // namespace skinsim
