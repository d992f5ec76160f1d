#include "skinsim/optics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "skinsim/errors.hpp"

namespace skinsim {

OpticalModel OpticalModel::linear(double slope_v_per_mm, double offset_v,
                                  double x_min_mm, double x_max_mm,
                                  RangePolicy policy) {
    if (!(slope_v_per_mm > 0.0))
        throw ParameterError("optical model: slope must be positive");
    if (!(x_min_mm < x_max_mm))
        throw ParameterError("optical model: x_min must be below x_max");
    OpticalModel m;
    m.a_ = slope_v_per_mm;
    m.b_ = offset_v;
    m.x_min_ = x_min_mm;
    m.x_max_ = x_max_mm;
    m.policy_ = policy;
    return m;
}

OpticalModel OpticalModel::lookup(std::vector<SweepSample> samples, RangePolicy policy) {
    if (samples.size() < 2)
        throw ParameterError("optical lookup: need at least two samples");
    for (std::size_t i = 1; i < samples.size(); ++i) {
        if (!(samples[i].distance_mm > samples[i - 1].distance_mm))
            throw ParameterError("optical lookup: distances must be strictly increasing");
        if (!(samples[i].voltage_v > samples[i - 1].voltage_v))
            throw ParameterError("optical lookup: voltages must be strictly increasing");
    }
    OpticalModel m;
    m.x_min_ = samples.front().distance_mm;
    m.x_max_ = samples.back().distance_mm;
    m.policy_ = policy;
    m.lookup_ = std::move(samples);
    return m;
}

double OpticalModel::interpolate(double x_mm) const {
    if (is_linear())
        return a_ * x_mm + b_;
    auto it = std::upper_bound(lookup_.begin(), lookup_.end(), x_mm,
                               [](double x, const SweepSample& s) { return x < s.distance_mm; });
    if (it == lookup_.begin())
        return lookup_.front().voltage_v;
    if (it == lookup_.end())
        return lookup_.back().voltage_v;
    const SweepSample& hi = *it;
    const SweepSample& lo = *(it - 1);
    const double t = (x_mm - lo.distance_mm) / (hi.distance_mm - lo.distance_mm);
    return lo.voltage_v + t * (hi.voltage_v - lo.voltage_v);
}

double OpticalModel::v_min() const { return interpolate(x_min_); }
double OpticalModel::v_max() const { return interpolate(x_max_); }

void PigmentMix::validate() const {
    if (!(white_fraction >= 0.0 && white_fraction <= 1.0))
        throw ParameterError("pigment: white fraction must be in [0, 1]");
    if (!(rho_black > 0.0 && rho_black < 1.0))
        throw ParameterError("pigment: rho_black must be in (0, 1)");
}

ClampedVoltage voltage_at_gap_checked(double x_mm, const OpticalModel& model) {
    if (x_mm < model.x_min() || x_mm > model.x_max()) {
        if (model.policy() == RangePolicy::Error)
            throw RangeError("gap " + std::to_string(x_mm) + " mm outside the model range [" +
                             std::to_string(model.x_min()) + ", " +
                             std::to_string(model.x_max()) + "]");
        const double clamped = std::clamp(x_mm, model.x_min(), model.x_max());
        return {model.interpolate(clamped), true};
    }
    return {model.interpolate(x_mm), false};
}

double voltage_at_gap(double x_mm, const OpticalModel& model) {
    return voltage_at_gap_checked(x_mm, model).voltage_v;
}

double gap_at_voltage(double v, const OpticalModel& model) {
    if (v < model.v_min() || v > model.v_max())
        throw RangeError("voltage " + std::to_string(v) + " V outside the model image [" +
                         std::to_string(model.v_min()) + ", " +
                         std::to_string(model.v_max()) + "]");
    if (model.is_linear())
        return (v - model.offset()) / model.slope();
    // bisection on the monotone interpolant
    double lo = model.x_min(), hi = model.x_max();
    while (hi - lo > 1e-13) {
        const double mid = 0.5 * (lo + hi);
        if (model.interpolate(mid) < v)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

OpticalModel scale_by_pigment(const OpticalModel& base, const PigmentMix& mix,
                              double ref_white_fraction) {
    if (!base.is_linear())
        throw ParameterError("pigment scaling requires a linear model");
    mix.validate();
    PigmentMix ref{ref_white_fraction, mix.rho_black};
    ref.validate();
    const double scale = mix.reflectance() / ref.reflectance();
    const double a = base.slope() * scale;
    // anchor: voltage at x_max unchanged
    const double v_far = base.slope() * base.x_max() + base.offset();
    const double b = v_far - a * base.x_max();
    return OpticalModel::linear(a, b, base.x_min(), base.x_max(), base.policy());
}

LinearFit fit_linear(const std::vector<SweepSample>& samples,
                     double x_min_mm, double x_max_mm) {
    std::vector<SweepSample> in;
    for (const auto& s : samples)
        if (s.distance_mm >= x_min_mm && s.distance_mm <= x_max_mm)
            in.push_back(s);

    std::size_t distinct = 0;
    for (std::size_t i = 0; i < in.size(); ++i) {
        bool seen = false;
        for (std::size_t j = 0; j < i; ++j)
            if (in[j].distance_mm == in[i].distance_mm) { seen = true; break; }
        if (!seen) ++distinct;
    }
    if (distinct < 2)
        throw InsufficientDataError("linear fit needs two distinct in-range distances, got " +
                                    std::to_string(distinct));

    const double n = static_cast<double>(in.size());
    double sx = 0.0, sv = 0.0;
    for (const auto& s : in) { sx += s.distance_mm; sv += s.voltage_v; }
    const double mx = sx / n, mv = sv / n;
    double sxx = 0.0, sxv = 0.0, svv = 0.0;
    for (const auto& s : in) {
        const double dx = s.distance_mm - mx;
        const double dv = s.voltage_v - mv;
        sxx += dx * dx;
        sxv += dx * dv;
        svv += dv * dv;
    }
    LinearFit fit;
    fit.slope_v_per_mm = sxv / sxx;
    fit.offset_v = mv - fit.slope_v_per_mm * mx;
    if (svv <= 0.0) {
        fit.r2 = 1.0; // constant voltages: zero-slope line fits exactly
    } else {
        double ss_res = 0.0;
        for (const auto& s : in) {
            const double r = s.voltage_v - (fit.slope_v_per_mm * s.distance_mm + fit.offset_v);
            ss_res += r * r;
        }
        fit.r2 = std::clamp(1.0 - ss_res / svv, 0.0, 1.0);
    }
    return fit;
}

} // namespace skinsim
