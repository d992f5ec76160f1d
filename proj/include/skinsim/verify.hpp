#pragma once

#include <string>
#include <vector>

#include "skinsim/config.hpp"
#include "skinsim/scenarios.hpp"

namespace skinsim {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail; ///< measured values, for the report
};

/// Ramp scenario: indent to max_indent_mm at speed_mm_s, sampled at 1 kHz.
SimRecord run_ramp(const Config& cfg, double speed_mm_s, double max_indent_mm,
                   double noise_rms_v, std::uint64_t seed);

/// Sensor force reading per sample: the record's voltage trace mapped through
/// the static estimator. Underrange samples read 0 N.
TimeSeries estimated_force_series(const SimRecord& rec, const Config& cfg);

/// Lag of the sensor's force reading behind the applied load for one
/// noise-free ramp at the given speed, with the contact dead zone set to
/// deadzone_mm. Positive when the reading trails.
double speed_lag(const Config& cfg, double deadzone_mm, double speed_mm_s,
                 double max_indent_mm = 3.0);

struct CycleStats {
    std::vector<double> peaks; ///< filtered per-cycle output maxima
    double cv = 0.0;
    double first10_mean = 0.0;
    double last10_mean = 0.0;
};

/// Repeated loading protocol: cycles of up-ramp, dwell, down-ramp, dwell;
/// per-cycle peaks of the 9-point-filtered output.
CycleStats run_cycle_protocol(const Config& cfg, int cycles, double speed_mm_s,
                              double max_indent_mm, double dwell_s);

/// The grasp-hold-release trace used by the gripper demo and its checks.
HoldSpec default_grasp_spec();

/// Runs all acceptance criteria against the given base configuration.
std::vector<CriterionResult> run_acceptance(const Config& base);

/// One "<id> PASS/FAIL name: detail" line per criterion.
std::string format_report(const std::vector<CriterionResult>& results);

} // namespace skinsim
