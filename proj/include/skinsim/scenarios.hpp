#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include <json.hpp>

#include "skinsim/mechanics.hpp"
#include "skinsim/optics.hpp"
#include "skinsim/signal.hpp"

namespace skinsim {

/// Piecewise-linear indentation trajectory. Times strictly increase, indents
/// are non-negative and the profile starts at zero indent.
class MotionProfile {
public:
    struct Breakpoint {
        double time_s;
        double indent_mm;
    };

    explicit MotionProfile(std::vector<Breakpoint> breakpoints);

    double duration_s() const { return points_.back().time_s; }
    double indent_at(double t_s) const;
    /// Right-hand derivative; zero past the last breakpoint.
    double rate_at(double t_s) const;
    const std::vector<Breakpoint>& breakpoints() const { return points_; }

private:
    std::vector<Breakpoint> points_;
};

struct RampSpec {
    double speed_mm_s = 1.0;
    double max_indent_mm = 3.0;
};

struct CyclicSpec {
    double speed_mm_s = 1.0;
    double max_indent_mm = 3.0;
    int cycles = 1;
    double dwell_s = 0.0;
};

/// Grasp-style trace: from each level, ramp to the next at transition_speed
/// and hold it for hold_s.
struct HoldSpec {
    struct Segment {
        double level_mm;
        double hold_s;
    };
    double transition_speed_mm_s = 4.0;
    std::vector<Segment> segments;
};

MotionProfile make_profile(const RampSpec& spec);
MotionProfile make_profile(const CyclicSpec& spec);
MotionProfile make_profile(const HoldSpec& spec);

/// Deterministic Gaussian stream: Box-Muller transform over 53-bit uniforms
/// from std::mt19937_64. Pinned here (rather than std::normal_distribution,
/// whose sample sequence is implementation-defined) so identical seeds give
/// identical records everywhere.
class NormalSampler {
public:
    explicit NormalSampler(std::uint64_t seed) : engine_(seed) {}
    double next();

private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

/// Synchronized traces of one scenario run, all sampled at the same dt.
struct SimRecord {
    TimeSeries time;    ///< seconds
    TimeSeries indent;  ///< mm
    TimeSeries force;   ///< N
    TimeSeries voltage; ///< V, noise included
    TimeSeries output;  ///< V, baseline minus voltage
    nlohmann::json config_snapshot;
    std::uint64_t seed = 0;
};

/// Runs the forward chain over the profile at 1 kHz. Per sample: reaction
/// force from the raw indent and profile rate, optical gap from the indent
/// reduced by the material dead zone (the skin patch facing the
/// photoreflector engages after deadzone_mm of travel), voltage from the gap
/// plus seeded Gaussian noise. The baseline sample (t = 0) stays noise-free
/// so the output trace starts at exactly zero.
/// Gap saturation or an optical range violation aborts with SimulationError
/// naming the first offending time.
SimRecord simulate(const MotionProfile& profile, const SensorGeometry& geom,
                   const MaterialParams& mat, const OpticalModel& model,
                   double noise_rms_v, std::uint64_t seed);

struct GraspEvent {
    enum class Kind { Grasp, Release };
    Kind kind;
    double time_s;
    double output_v; ///< filtered output when the event fired
};

/// Schmitt-style event detector on the 9-point-filtered output: a grasp
/// fires after the filtered output stays above on_threshold for min_hold
/// seconds, a release after it stays below off_threshold for min_hold.
/// Events alternate starting with a grasp.
std::vector<GraspEvent> detect_grasp(const TimeSeries& output, double on_threshold_v,
                                     double off_threshold_v, double min_hold_s);

} // namespace skinsim
