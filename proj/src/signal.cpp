#include "skinsim/signal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>

#include "skinsim/errors.hpp"

namespace skinsim {

std::string unit_label(Unit u) {
    switch (u) {
        case Unit::Seconds: return "s";
        case Unit::Millimeters: return "mm";
        case Unit::Newtons: return "N";
        case Unit::Volts: return "V";
    }
    return "?";
}

TimeSeries moving_average(const TimeSeries& ts, int window) {
    const std::size_t n = ts.size();
    if (n == 0)
        throw DataError("moving average of an empty series");
    if (window < 1 || window % 2 == 0)
        throw ParameterError("moving average window must be odd and >= 1");
    if (static_cast<std::size_t>(window) > n)
        throw ParameterError("moving average window exceeds the series length");

    TimeSeries out = ts;
    const std::size_t half = static_cast<std::size_t>(window / 2);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t w = std::min({half, i, n - 1 - i});
        double acc = 0.0;
        for (std::size_t j = i - w; j <= i + w; ++j)
            acc += ts.samples[j];
        out.samples[i] = acc / static_cast<double>(2 * w + 1);
    }
    return out;
}

TimeSeries invert_output(const TimeSeries& ts, std::optional<double> baseline_v) {
    if (ts.samples.empty())
        throw DataError("inverting an empty series");
    if (ts.unit != Unit::Volts)
        throw ParameterError("inverted output is defined for voltage series");
    const double baseline = baseline_v.value_or(ts.samples.front());
    TimeSeries out = ts;
    for (double& v : out.samples)
        v = baseline - v;
    return out;
}

namespace {

// Overlapping, dt-aligned windows of two series on the common time span.
struct AlignedPair {
    std::vector<double> a, b;
    double dt;
};

AlignedPair align(const TimeSeries& ref, const TimeSeries& sig) {
    if (ref.samples.empty() || sig.samples.empty())
        throw DataError("phase lag of an empty series");
    if (std::fabs(ref.dt - sig.dt) > 1e-12 * std::max(ref.dt, sig.dt))
        throw ParameterError("phase lag requires equal sample periods");
    const double dt = ref.dt;
    const double off = (sig.t0 - ref.t0) / dt;
    if (std::fabs(off - std::llround(off)) > 1e-6)
        throw ParameterError("series origins are not aligned to the sample grid");

    const double t_lo = std::max(ref.t0, sig.t0);
    const double t_hi = std::min(ref.time_at(ref.size() - 1), sig.time_at(sig.size() - 1));
    if (t_hi < t_lo)
        throw DataError("series have no overlapping support");
    const auto ir = static_cast<std::size_t>(std::llround((t_lo - ref.t0) / dt));
    const auto is = static_cast<std::size_t>(std::llround((t_lo - sig.t0) / dt));
    const auto n = static_cast<std::size_t>(std::llround((t_hi - t_lo) / dt)) + 1;

    AlignedPair p;
    p.dt = dt;
    p.a.assign(ref.samples.begin() + ir, ref.samples.begin() + ir + n);
    p.b.assign(sig.samples.begin() + is, sig.samples.begin() + is + n);
    return p;
}

double mean_of(const std::vector<double>& v) {
    return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

} // namespace

double phase_lag(const TimeSeries& reference, const TimeSeries& signal) {
    AlignedPair p = align(reference, signal);
    const std::size_t n = p.a.size();
    if (n < 2)
        throw DataError("phase lag needs at least two overlapping samples");

    const double ma = mean_of(p.a), mb = mean_of(p.b);
    for (double& x : p.a) x -= ma;
    for (double& x : p.b) x -= mb;

    auto variance = [](const std::vector<double>& v) {
        double s = 0.0;
        for (double x : v) s += x * x;
        return s;
    };
    if (variance(p.a) <= 0.0 || variance(p.b) <= 0.0)
        throw UndefinedCorrelationError("cross-correlation of a constant series");

    // prefix sums of values and squares for O(1) window statistics
    std::vector<double> sa(n + 1, 0.0), sb(n + 1, 0.0), sa2(n + 1, 0.0), sb2(n + 1, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        sa[i + 1] = sa[i] + p.a[i];
        sb[i + 1] = sb[i] + p.b[i];
        sa2[i + 1] = sa2[i] + p.a[i] * p.a[i];
        sb2[i + 1] = sb2[i] + p.b[i] * p.b[i];
    }

    const auto L = static_cast<long long>(n / 2);
    long long best_lag = 0;
    double best_r = -2.0;
    for (long long lag = -L; lag <= L; ++lag) {
        std::size_t ia, ib;
        if (lag >= 0) {
            ia = 0;
            ib = static_cast<std::size_t>(lag);
        } else {
            ia = static_cast<std::size_t>(-lag);
            ib = 0;
        }
        const std::size_t m = n - std::max(ia, ib);
        if (m < 2)
            continue;
        double dot = 0.0;
        for (std::size_t k = 0; k < m; ++k)
            dot += p.a[ia + k] * p.b[ib + k];
        const double wa = sa[ia + m] - sa[ia];
        const double wb = sb[ib + m] - sb[ib];
        const double va = (sa2[ia + m] - sa2[ia]) - wa * wa / static_cast<double>(m);
        const double vb = (sb2[ib + m] - sb2[ib]) - wb * wb / static_cast<double>(m);
        if (va <= 0.0 || vb <= 0.0)
            continue;
        const double r = (dot - wa * wb / static_cast<double>(m)) / std::sqrt(va * vb);
        if (r > best_r || (r == best_r && std::llabs(lag) < std::llabs(best_lag))) {
            best_r = r;
            best_lag = lag;
        }
    }
    return static_cast<double>(best_lag) * p.dt;
}

namespace {

// Branch samples sorted by force with exact duplicate forces averaged,
// so flat segments (dwells, dead zones) interpolate cleanly.
struct Branch {
    std::vector<double> force, output;
};

Branch collapse_branch(const double* f, const double* o, std::size_t n) {
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t i, std::size_t j) { return f[i] < f[j]; });
    Branch br;
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        double acc = 0.0;
        while (j < n && f[idx[j]] == f[idx[i]]) {
            acc += o[idx[j]];
            ++j;
        }
        br.force.push_back(f[idx[i]]);
        br.output.push_back(acc / static_cast<double>(j - i));
        i = j;
    }
    return br;
}

double interp_branch(const Branch& br, double f) {
    const auto& xs = br.force;
    auto it = std::upper_bound(xs.begin(), xs.end(), f);
    if (it == xs.begin())
        return br.output.front();
    if (it == xs.end())
        return br.output.back();
    const std::size_t hi = static_cast<std::size_t>(it - xs.begin());
    const std::size_t lo = hi - 1;
    const double t = (f - xs[lo]) / (xs[hi] - xs[lo]);
    return br.output[lo] + t * (br.output[hi] - br.output[lo]);
}

} // namespace

double hysteresis_metric(const TimeSeries& force, const TimeSeries& output,
                         std::size_t split_index) {
    const std::size_t n = force.size();
    if (n != output.size() || n == 0)
        throw DataError("hysteresis needs equally sized force and output series");
    if (split_index < 1 || split_index + 1 >= n)
        throw ParameterError("split index must leave two samples on each branch");

    const Branch load = collapse_branch(force.samples.data(), output.samples.data(),
                                        split_index + 1);
    const Branch unload = collapse_branch(force.samples.data() + split_index,
                                          output.samples.data() + split_index,
                                          n - split_index);
    const double lo = std::max(load.force.front(), unload.force.front());
    const double hi = std::min(load.force.back(), unload.force.back());
    if (hi < lo)
        throw DataError("loading and unloading force ranges do not overlap");

    const auto [omin, omax] = std::minmax_element(output.samples.begin(), output.samples.end());
    const double full_scale = *omax - *omin;
    if (full_scale <= 0.0)
        return 0.0;

    const int grid = 256;
    double worst = 0.0;
    for (int k = 0; k < grid; ++k) {
        const double f = lo + (hi - lo) * static_cast<double>(k) / (grid - 1);
        worst = std::max(worst, std::fabs(interp_branch(load, f) - interp_branch(unload, f)));
    }
    return worst / full_scale;
}

double sensitivity(const TimeSeries& force, const TimeSeries& output) {
    const std::size_t n = force.size();
    if (n != output.size() || n == 0)
        throw DataError("sensitivity needs equally sized force and output series");
    double mf = mean_of(force.samples), mo = mean_of(output.samples);
    double sff = 0.0, sfo = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double df = force.samples[i] - mf;
        sff += df * df;
        sfo += df * (output.samples[i] - mo);
    }
    if (sff <= 0.0)
        throw DataError("sensitivity undefined for zero force variance");
    return sfo / sff;
}

double dynamic_range(double full_scale_v, double noise_rms_v) {
    if (!(full_scale_v > 0.0) || !(noise_rms_v > 0.0))
        throw DomainError("dynamic range needs positive full scale and noise RMS");
    return 20.0 * std::log10(full_scale_v / noise_rms_v);
}

double repeatability(const std::vector<double>& peaks) {
    if (peaks.size() < 2)
        throw InsufficientDataError("repeatability needs at least two cycles");
    const double mean = mean_of(peaks);
    if (mean <= 0.0)
        throw DataError("repeatability undefined for non-positive mean peak");
    double acc = 0.0;
    for (double p : peaks) {
        const double d = p - mean;
        acc += d * d;
    }
    return std::sqrt(acc / static_cast<double>(peaks.size())) / mean;
}

} // namespace skinsim
