#pragma once

#include <cstddef>
#include <vector>

namespace skinsim {

/// What voltage_at_gap does with a distance outside the model's valid range.
enum class RangePolicy { Error, Clamp };

/// One point of a measured distance-voltage sweep.
struct SweepSample {
    double distance_mm = 0.0;
    double voltage_v = 0.0;
};

/// Monotone distance -> voltage map of the photoreflector. Either the linear
/// approximation V = a*x + b restricted to [x_min, x_max], or a measured
/// sweep interpolated piecewise-linearly.
class OpticalModel {
public:
    static OpticalModel linear(double slope_v_per_mm, double offset_v,
                               double x_min_mm, double x_max_mm,
                               RangePolicy policy = RangePolicy::Error);
    static OpticalModel lookup(std::vector<SweepSample> samples,
                               RangePolicy policy = RangePolicy::Error);

    bool is_linear() const { return lookup_.empty(); }
    double slope() const { return a_; }
    double offset() const { return b_; }
    double x_min() const { return x_min_; }
    double x_max() const { return x_max_; }
    double v_min() const; ///< voltage at x_min (image lower bound)
    double v_max() const; ///< voltage at x_max (image upper bound)
    RangePolicy policy() const { return policy_; }
    const std::vector<SweepSample>& samples() const { return lookup_; }

    double interpolate(double x_mm) const; ///< no range handling; x inside domain

private:
    OpticalModel() = default;
    double a_ = 0.0, b_ = 0.0;
    double x_min_ = 0.0, x_max_ = 0.0;
    RangePolicy policy_ = RangePolicy::Error;
    std::vector<SweepSample> lookup_; ///< empty for the linear variant
};

/// Pigment mix of the reflective silicone surface. Reflectance factor is
/// rho_black + white_fraction * (1 - rho_black).
struct PigmentMix {
    double white_fraction = 0.75;
    double rho_black = 0.25;

    double reflectance() const { return rho_black + white_fraction * (1.0 - rho_black); }
    void validate() const;
};

/// Photoreflector voltage at optical gap x. Out-of-range x follows the
/// model's policy: RangeError, or clamped to the nearest bound.
double voltage_at_gap(double x_mm, const OpticalModel& model);

struct ClampedVoltage {
    double voltage_v;
    bool clamped;
};

/// Clamp-aware variant; never throws for the Clamp policy and reports
/// whether clamping happened.
ClampedVoltage voltage_at_gap_checked(double x_mm, const OpticalModel& model);

/// Exact inverse of voltage_at_gap on the model's voltage image.
/// Linear inverse is closed form; lookup inverse brackets by bisection.
double gap_at_voltage(double v, const OpticalModel& model);

/// Rescales a linear model's slope by the reflectance ratio
/// rho(mix)/rho(reference white fraction), keeping the voltage at x_max
/// unchanged so the far-range anchor is preserved.
OpticalModel scale_by_pigment(const OpticalModel& base, const PigmentMix& mix,
                              double ref_white_fraction);

struct LinearFit {
    double slope_v_per_mm;
    double offset_v;
    double r2;
};

/// Ordinary least squares of voltage over distance using the samples that
/// fall inside [x_min, x_max]. Needs two distinct in-range distances.
LinearFit fit_linear(const std::vector<SweepSample>& samples,
                     double x_min_mm, double x_max_mm);

} // namespace skinsim
