#pragma once

#include <cstddef>
#include <vector>

#include "skinsim/optics.hpp"

namespace skinsim {

/// One calibration observation: applied force and inverted module output.
struct ForceOutputSample {
    double force_n = 0.0;
    double output_v = 0.0;
};

/// Polynomial map force -> output, coefficients in ascending degree
/// (units V, V/N, V/N^2, ...), valid over [force_min, force_max].
struct CalibrationCurve {
    std::vector<double> coefficients;
    double force_min_n = 0.0;
    double force_max_n = 0.0;
    double residual_rms_v = 0.0;
    bool monotone = true; ///< strictly increasing on a 100-point domain grid

    double evaluate(double force_n) const;
};

/// Least-squares polynomial of the requested degree (>= 1) through the
/// samples; needs degree + 1 distinct forces. Monotonicity over the fitted
/// domain is checked on a 100-point grid and reported, not enforced.
CalibrationCurve fit_force_voltage(const std::vector<ForceOutputSample>& samples,
                                   int degree);

struct PigmentScore {
    double slope_v_per_mm = 0.0;
    double r2 = 0.0;
    bool qualified = false; ///< r2 >= min_r2
};

struct PigmentSelection {
    std::size_t chosen = 0;
    std::vector<PigmentScore> scores;
    bool no_qualifier = false; ///< no mix met the linearity threshold
};

/// Scores each distance-voltage sweep by its linear fit over
/// [x_min, x_max] and picks the steepest slope among mixes with
/// r2 >= min_r2; if none qualifies, the best-r2 mix with a flag.
/// Ties resolve to the lower index.
PigmentSelection pigment_select(const std::vector<std::vector<SweepSample>>& sweeps,
                                double x_min_mm, double x_max_mm, double min_r2);

} // namespace skinsim
