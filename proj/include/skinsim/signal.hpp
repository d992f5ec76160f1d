#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace skinsim {

enum class Unit { Seconds, Millimeters, Newtons, Volts };

std::string unit_label(Unit u);

/// Uniformly sampled signal. samples[i] is the value at t0 + i*dt.
struct TimeSeries {
    double t0 = 0.0;
    double dt = 1e-3;
    std::vector<double> samples;
    Unit unit = Unit::Volts;

    std::size_t size() const { return samples.size(); }
    double time_at(std::size_t i) const { return t0 + static_cast<double>(i) * dt; }
};

/// Centered moving average of odd window k; boundary samples use the largest
/// symmetric window that fits, so the output length equals the input length.
TimeSeries moving_average(const TimeSeries& ts, int window);

/// Module-output convention: baseline minus voltage, so the series rises with
/// contact force. Baseline defaults to the first sample.
TimeSeries invert_output(const TimeSeries& ts, std::optional<double> baseline_v = std::nullopt);

/// Delay of `signal` relative to `reference` in seconds, positive when the
/// signal trails. Argmax over lags in [-L, +L] (L = half the common length)
/// of the zero-normalized cross-correlation: each candidate lag correlates
/// the overlapping windows with their own means and norms removed, which
/// keeps the estimate exact for pure time shifts. Exact score ties resolve
/// toward the smallest |lag|.
double phase_lag(const TimeSeries& reference, const TimeSeries& signal);

/// Maximum separation between the loading and unloading output-vs-force
/// branches on a common force grid, divided by the full-scale output.
/// split_index is the last sample of the loading branch.
double hysteresis_metric(const TimeSeries& force, const TimeSeries& output,
                         std::size_t split_index);

/// Least-squares slope of output against force, V/N.
double sensitivity(const TimeSeries& force, const TimeSeries& output);

/// 20*log10(full_scale / noise_rms) in dB.
double dynamic_range(double full_scale_v, double noise_rms_v);

/// Coefficient of variation (population std / mean) of per-cycle peaks.
double repeatability(const std::vector<double>& peaks);

} // namespace skinsim
