#include "skinsim/mechanics.hpp"

#include <cmath>
#include <string>

#include "skinsim/errors.hpp"

namespace skinsim {

void MaterialParams::validate() const {
    if (!(2.0 * (c10_mpa + c01_mpa) > 0.0))
        throw ParameterError("material: 2*(c10 + c01) must be positive");
    if (damping_n_s_per_mm < 0.0)
        throw ParameterError("material: damping must be >= 0");
    if (deadzone_mm < 0.0)
        throw ParameterError("material: dead zone must be >= 0");
}

void SensorGeometry::validate() const {
    if (height_mm <= 0.0 || width_mm <= 0.0 || depth_mm <= 0.0)
        throw ParameterError("geometry: all lengths must be positive");
    if (gap0_mm <= 0.0)
        throw ParameterError("geometry: gap0 must be positive");
    if (!(kappa > 0.0 && kappa <= 1.0))
        throw ParameterError("geometry: kappa must be in (0, 1]");
}

namespace {

void check_stretch(double lambda) {
    if (!(lambda > 0.0))
        throw DomainError("stretch must be positive, got " + std::to_string(lambda));
}

void check_indent(double indent_mm, const SensorGeometry& geom) {
    if (indent_mm < 0.0)
        throw DomainError("indent must be >= 0, got " + std::to_string(indent_mm));
    if (indent_mm >= geom.height_mm)
        throw GeometryError("indent " + std::to_string(indent_mm) +
                            " mm reaches the body height " +
                            std::to_string(geom.height_mm) + " mm");
}

} // namespace

double strain_energy(double lambda, const MaterialParams& mat) {
    check_stretch(lambda);
    // I1 - 3 = (lambda-1)^2 (lambda+2) / lambda
    // I2 - 3 = (lambda-1)^2 (2 lambda+1) / lambda^2
    // Factored so the (lambda-1)^2 root carries no cancellation near 1.
    const double d = lambda - 1.0;
    const double l2 = lambda * lambda;
    return d * d * (mat.c10_mpa * (lambda + 2.0) / lambda +
                    mat.c01_mpa * (2.0 * lambda + 1.0) / l2);
}

double nominal_stress(double lambda, const MaterialParams& mat) {
    check_stretch(lambda);
    // dW/dlambda = 2 (lambda - lambda^-2)(c10 + c01/lambda),
    // with lambda - lambda^-2 = (lambda-1)(lambda^2+lambda+1)/lambda^2.
    const double l2 = lambda * lambda;
    return 2.0 * (lambda - 1.0) * (l2 + lambda + 1.0) / l2 *
           (mat.c10_mpa + mat.c01_mpa / lambda);
}

double axial_force(double indent_mm, double rate_mm_s,
                   const SensorGeometry& geom, const MaterialParams& mat) {
    check_indent(indent_mm, geom);
    const double d_eff = std::max(0.0, indent_mm - mat.deadzone_mm);
    const double lambda = (geom.height_mm - d_eff) / geom.height_mm;
    const double elastic = std::fabs(nominal_stress(lambda, mat)) * geom.cross_section_mm2();
    return elastic + mat.damping_n_s_per_mm * std::max(rate_mm_s, 0.0);
}

DeformationState lateral_gap(double indent_mm, const SensorGeometry& geom) {
    check_indent(indent_mm, geom);
    DeformationState st;
    st.indent_mm = indent_mm;
    st.lambda = (geom.height_mm - indent_mm) / geom.height_mm;
    st.lambda_t = 1.0 / std::sqrt(st.lambda);
    st.gap_mm = geom.gap0_mm - geom.kappa * (geom.width_mm / 2.0) * (st.lambda_t - 1.0);
    if (st.gap_mm <= 0.0)
        throw SaturationError("optical gap closed at indent " +
                              std::to_string(indent_mm) + " mm");
    return st;
}

} // namespace skinsim
