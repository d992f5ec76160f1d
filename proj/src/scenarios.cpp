#include "skinsim/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "skinsim/errors.hpp"

namespace skinsim {

MotionProfile::MotionProfile(std::vector<Breakpoint> breakpoints)
    : points_(std::move(breakpoints)) {
    if (points_.empty())
        throw ParameterError("motion profile needs at least one breakpoint");
    if (points_.front().indent_mm != 0.0)
        throw ParameterError("motion profile must start at zero indent");
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (points_[i].indent_mm < 0.0)
            throw ParameterError("motion profile indents must be >= 0");
        if (i > 0 && !(points_[i].time_s > points_[i - 1].time_s))
            throw ParameterError("motion profile times must be strictly increasing");
    }
}

double MotionProfile::indent_at(double t_s) const {
    if (t_s <= points_.front().time_s)
        return points_.front().indent_mm;
    if (t_s >= points_.back().time_s)
        return points_.back().indent_mm;
    auto it = std::upper_bound(points_.begin(), points_.end(), t_s,
                               [](double t, const Breakpoint& b) { return t < b.time_s; });
    const Breakpoint& hi = *it;
    const Breakpoint& lo = *(it - 1);
    const double u = (t_s - lo.time_s) / (hi.time_s - lo.time_s);
    return lo.indent_mm + u * (hi.indent_mm - lo.indent_mm);
}

double MotionProfile::rate_at(double t_s) const {
    if (t_s >= points_.back().time_s || points_.size() < 2)
        return 0.0;
    auto it = std::upper_bound(points_.begin(), points_.end(), t_s,
                               [](double t, const Breakpoint& b) { return t < b.time_s; });
    if (it == points_.begin())
        it = points_.begin() + 1;
    const Breakpoint& hi = *it;
    const Breakpoint& lo = *(it - 1);
    return (hi.indent_mm - lo.indent_mm) / (hi.time_s - lo.time_s);
}

MotionProfile make_profile(const RampSpec& spec) {
    if (!(spec.speed_mm_s > 0.0) || !(spec.max_indent_mm > 0.0))
        throw ParameterError("ramp needs positive speed and max indent");
    return MotionProfile({{0.0, 0.0},
                          {spec.max_indent_mm / spec.speed_mm_s, spec.max_indent_mm}});
}

MotionProfile make_profile(const CyclicSpec& spec) {
    if (!(spec.speed_mm_s > 0.0) || !(spec.max_indent_mm > 0.0))
        throw ParameterError("cycle needs positive speed and max indent");
    if (spec.cycles < 1)
        throw ParameterError("cycle count must be >= 1");
    if (spec.dwell_s < 0.0)
        throw ParameterError("dwell must be >= 0");

    const double ramp_s = spec.max_indent_mm / spec.speed_mm_s;
    std::vector<MotionProfile::Breakpoint> pts{{0.0, 0.0}};
    double t = 0.0;
    for (int c = 0; c < spec.cycles; ++c) {
        t += ramp_s;
        pts.push_back({t, spec.max_indent_mm});
        if (spec.dwell_s > 0.0) {
            t += spec.dwell_s;
            pts.push_back({t, spec.max_indent_mm});
        }
        t += ramp_s;
        pts.push_back({t, 0.0});
        if (spec.dwell_s > 0.0) {
            t += spec.dwell_s;
            pts.push_back({t, 0.0});
        }
    }
    return MotionProfile(std::move(pts));
}

MotionProfile make_profile(const HoldSpec& spec) {
    if (!(spec.transition_speed_mm_s > 0.0))
        throw ParameterError("hold profile needs a positive transition speed");
    if (spec.segments.empty())
        throw ParameterError("hold profile needs at least one segment");

    std::vector<MotionProfile::Breakpoint> pts{{0.0, 0.0}};
    double t = 0.0;
    double level = 0.0;
    for (const auto& seg : spec.segments) {
        if (seg.level_mm < 0.0 || seg.hold_s < 0.0)
            throw ParameterError("hold segments need non-negative level and duration");
        if (seg.level_mm != level) {
            t += std::fabs(seg.level_mm - level) / spec.transition_speed_mm_s;
            level = seg.level_mm;
            pts.push_back({t, level});
        }
        if (seg.hold_s > 0.0) {
            t += seg.hold_s;
            pts.push_back({t, level});
        }
    }
    if (pts.size() < 2)
        throw ParameterError("hold profile has zero duration");
    return MotionProfile(std::move(pts));
}

double NormalSampler::next() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    // 53-bit uniforms; u1 shifted into (0, 1] so the log stays finite
    const double u1 = (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * 3.14159265358979323846 * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
}

SimRecord simulate(const MotionProfile& profile, const SensorGeometry& geom,
                   const MaterialParams& mat, const OpticalModel& model,
                   double noise_rms_v, std::uint64_t seed) {
    if (noise_rms_v < 0.0)
        throw ParameterError("noise RMS must be >= 0");
    geom.validate();
    mat.validate();

    const double dt = 1e-3;
    const auto n = static_cast<std::size_t>(std::llround(profile.duration_s() / dt)) + 1;

    SimRecord rec;
    rec.seed = seed;
    for (TimeSeries* ts : {&rec.time, &rec.indent, &rec.force, &rec.voltage, &rec.output}) {
        ts->t0 = 0.0;
        ts->dt = dt;
        ts->samples.resize(n);
    }
    rec.time.unit = Unit::Seconds;
    rec.indent.unit = Unit::Millimeters;
    rec.force.unit = Unit::Newtons;
    rec.voltage.unit = Unit::Volts;
    rec.output.unit = Unit::Volts;

    MaterialParams raw_indent_mat = mat;
    raw_indent_mat.deadzone_mm = 0.0;

    NormalSampler noise(seed);
    double baseline = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) * dt;
        const double d = profile.indent_at(t);
        const double rate = profile.rate_at(t);
        double volts;
        try {
            rec.force.samples[i] = axial_force(d, rate, geom, raw_indent_mat);
            const double d_optical = std::max(0.0, d - mat.deadzone_mm);
            const DeformationState st = lateral_gap(d_optical, geom);
            volts = voltage_at_gap(st.gap_mm, model);
        } catch (const SaturationError& e) {
            throw SimulationError(std::string(e.what()) + " at t = " + std::to_string(t) + " s", t);
        } catch (const RangeError& e) {
            throw SimulationError(std::string(e.what()) + " at t = " + std::to_string(t) + " s", t);
        }
        if (i == 0)
            baseline = volts;
        else if (noise_rms_v > 0.0)
            volts += noise_rms_v * noise.next();
        rec.time.samples[i] = t;
        rec.indent.samples[i] = d;
        rec.voltage.samples[i] = volts;
        rec.output.samples[i] = baseline - volts;
    }

    rec.config_snapshot = {
        {"material",
         {{"c10_mpa", mat.c10_mpa},
          {"c01_mpa", mat.c01_mpa},
          {"damping_n_s_per_mm", mat.damping_n_s_per_mm},
          {"deadzone_mm", mat.deadzone_mm}}},
        {"geometry",
         {{"height_mm", geom.height_mm},
          {"width_mm", geom.width_mm},
          {"depth_mm", geom.depth_mm},
          {"gap0_mm", geom.gap0_mm},
          {"kappa", geom.kappa}}},
        {"noise_rms_v", noise_rms_v},
        {"seed", seed},
    };
    return rec;
}

std::vector<GraspEvent> detect_grasp(const TimeSeries& output, double on_threshold_v,
                                     double off_threshold_v, double min_hold_s) {
    if (!(on_threshold_v > off_threshold_v) || off_threshold_v < 0.0)
        throw ParameterError("thresholds must satisfy on > off >= 0");
    if (min_hold_s < 0.0)
        throw ParameterError("min hold must be >= 0");
    if (output.samples.empty())
        throw DataError("grasp detection on an empty series");

    int k = static_cast<int>(std::min<std::size_t>(9, output.size()));
    if (k % 2 == 0)
        --k;
    const TimeSeries filtered = moving_average(output, k);

    const auto hold_needed =
        static_cast<std::size_t>(std::ceil(min_hold_s / filtered.dt - 1e-9)) + 1;

    std::vector<GraspEvent> events;
    bool grasped = false;
    std::size_t run = 0;
    for (std::size_t i = 0; i < filtered.size(); ++i) {
        const double v = filtered.samples[i];
        const bool active = grasped ? (v < off_threshold_v) : (v > on_threshold_v);
        run = active ? run + 1 : 0;
        if (run >= hold_needed) {
            events.push_back({grasped ? GraspEvent::Kind::Release : GraspEvent::Kind::Grasp,
                              filtered.time_at(i), v});
            grasped = !grasped;
            run = 0;
        }
    }
    return events;
}

} // namespace skinsim
