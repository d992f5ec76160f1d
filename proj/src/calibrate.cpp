#include "skinsim/calibrate.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "skinsim/errors.hpp"

namespace skinsim {

double CalibrationCurve::evaluate(double force_n) const {
    double acc = 0.0;
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it)
        acc = acc * force_n + *it;
    return acc;
}

namespace {

// Least squares via Householder QR on the Vandermonde matrix; adequate for
// the low degrees used here.
std::vector<double> polynomial_least_squares(const std::vector<ForceOutputSample>& samples,
                                             int degree) {
    const std::size_t rows = samples.size();
    const std::size_t cols = static_cast<std::size_t>(degree) + 1;
    std::vector<double> A(rows * cols);
    std::vector<double> y(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        double p = 1.0;
        for (std::size_t j = 0; j < cols; ++j) {
            A[i * cols + j] = p;
            p *= samples[i].force_n;
        }
        y[i] = samples[i].output_v;
    }

    for (std::size_t k = 0; k < cols; ++k) {
        double norm = 0.0;
        for (std::size_t i = k; i < rows; ++i)
            norm += A[i * cols + k] * A[i * cols + k];
        norm = std::sqrt(norm);
        if (norm == 0.0)
            throw InsufficientDataError("degenerate design matrix in polynomial fit");
        double alpha = A[k * cols + k] > 0.0 ? -norm : norm;
        std::vector<double> v(rows, 0.0);
        v[k] = A[k * cols + k] - alpha;
        for (std::size_t i = k + 1; i < rows; ++i)
            v[i] = A[i * cols + k];
        double vtv = 0.0;
        for (std::size_t i = k; i < rows; ++i)
            vtv += v[i] * v[i];
        if (vtv == 0.0)
            continue;
        for (std::size_t j = k; j < cols; ++j) {
            double dot = 0.0;
            for (std::size_t i = k; i < rows; ++i)
                dot += v[i] * A[i * cols + j];
            const double f = 2.0 * dot / vtv;
            for (std::size_t i = k; i < rows; ++i)
                A[i * cols + j] -= f * v[i];
        }
        double dot = 0.0;
        for (std::size_t i = k; i < rows; ++i)
            dot += v[i] * y[i];
        const double f = 2.0 * dot / vtv;
        for (std::size_t i = k; i < rows; ++i)
            y[i] -= f * v[i];
    }

    // back substitution on the R factor
    std::vector<double> coef(cols, 0.0);
    for (std::size_t j = cols; j-- > 0;) {
        double acc = y[j];
        for (std::size_t k = j + 1; k < cols; ++k)
            acc -= A[j * cols + k] * coef[k];
        const double diag = A[j * cols + j];
        if (diag == 0.0)
            throw InsufficientDataError("rank-deficient polynomial fit");
        coef[j] = acc / diag;
    }
    return coef;
}

} // namespace

CalibrationCurve fit_force_voltage(const std::vector<ForceOutputSample>& samples,
                                   int degree) {
    if (degree < 1)
        throw ParameterError("calibration degree must be >= 1");
    std::set<double> distinct;
    for (const auto& s : samples)
        distinct.insert(s.force_n);
    if (distinct.size() < static_cast<std::size_t>(degree) + 1)
        throw InsufficientDataError("polynomial of degree " + std::to_string(degree) +
                                    " needs " + std::to_string(degree + 1) +
                                    " distinct forces, got " + std::to_string(distinct.size()));

    CalibrationCurve curve;
    curve.coefficients = polynomial_least_squares(samples, degree);
    curve.force_min_n = *distinct.begin();
    curve.force_max_n = *distinct.rbegin();

    double ss = 0.0;
    for (const auto& s : samples) {
        const double r = s.output_v - curve.evaluate(s.force_n);
        ss += r * r;
    }
    curve.residual_rms_v = std::sqrt(ss / static_cast<double>(samples.size()));

    curve.monotone = true;
    double prev = curve.evaluate(curve.force_min_n);
    for (int k = 1; k < 100; ++k) {
        const double f = curve.force_min_n +
                         (curve.force_max_n - curve.force_min_n) * k / 99.0;
        const double v = curve.evaluate(f);
        if (v <= prev) {
            curve.monotone = false;
            break;
        }
        prev = v;
    }
    return curve;
}

PigmentSelection pigment_select(const std::vector<std::vector<SweepSample>>& sweeps,
                                double x_min_mm, double x_max_mm, double min_r2) {
    if (sweeps.empty())
        throw DataError("pigment selection needs at least one sweep");

    PigmentSelection sel;
    sel.scores.reserve(sweeps.size());
    for (const auto& sweep : sweeps) {
        const LinearFit fit = fit_linear(sweep, x_min_mm, x_max_mm);
        sel.scores.push_back({fit.slope_v_per_mm, fit.r2, fit.r2 >= min_r2});
    }

    long best = -1;
    for (std::size_t i = 0; i < sel.scores.size(); ++i) {
        if (!sel.scores[i].qualified)
            continue;
        if (best < 0 || sel.scores[i].slope_v_per_mm > sel.scores[best].slope_v_per_mm)
            best = static_cast<long>(i);
    }
    if (best < 0) {
        sel.no_qualifier = true;
        best = 0;
        for (std::size_t i = 1; i < sel.scores.size(); ++i)
            if (sel.scores[i].r2 > sel.scores[best].r2)
                best = static_cast<long>(i);
    }
    sel.chosen = static_cast<std::size_t>(best);
    return sel;
}

} // namespace skinsim
