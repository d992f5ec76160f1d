#pragma once

namespace skinsim {

/// Incompressible Mooney-Rivlin constants of the silicone body plus the two
/// artifact extensions: a linear rate damping term and a contact dead zone.
/// Stresses are in MPa so that stress times mm^2 gives force in N.
struct MaterialParams {
    double c10_mpa = -3.335e-5;
    double c01_mpa = 1.218e-2;
    double damping_n_s_per_mm = 0.0; ///< force added per unit loading rate, N/(mm/s)
    double deadzone_mm = 0.0;        ///< initial indentation with no effect

    /// Throws ParameterError if the small-strain shear modulus 2*(c10+c01)
    /// is not positive or a non-negative field is negative.
    void validate() const;
};

/// Body and optical-gap dimensions. kappa scales the ideal uniform lateral
/// bulge down to the fraction that actually closes the photoreflector gap.
struct SensorGeometry {
    double height_mm = 20.0;
    double width_mm = 22.0;
    double depth_mm = 22.0;
    double gap0_mm = 2.0;
    double kappa = 0.3;

    double cross_section_mm2() const { return width_mm * depth_mm; }
    void validate() const;
};

/// Kinematic state at one indentation level. lambda * lambda_t^2 == 1.
struct DeformationState {
    double indent_mm = 0.0;
    double lambda = 1.0;   ///< axial stretch, (height - indent) / height
    double lambda_t = 1.0; ///< transverse stretch, lambda^(-1/2)
    double gap_mm = 0.0;   ///< current photoreflector-silicone distance
};

/// Strain-energy density W(lambda) in MPa for uniaxial incompressible
/// compression/extension. W(1) = 0.
double strain_energy(double lambda, const MaterialParams& mat);

/// First Piola-Kirchhoff stress dW/dlambda in MPa, signed: negative in
/// compression (lambda < 1), zero at lambda = 1.
double nominal_stress(double lambda, const MaterialParams& mat);

/// Magnitude of the compressive reaction in N for a vertical indentation.
/// The dead zone shifts the effective indent; the damping term adds
/// damping * max(rate, 0).
double axial_force(double indent_mm, double rate_mm_s,
                   const SensorGeometry& geom, const MaterialParams& mat);

/// Lateral bulge kinematics: stretches from the raw indent and the resulting
/// optical gap gap0 - kappa * (width/2) * (lambda_t - 1).
/// Throws SaturationError if the bulge has closed the gap entirely.
DeformationState lateral_gap(double indent_mm, const SensorGeometry& geom);

} // namespace skinsim
