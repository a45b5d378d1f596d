#pragma once

#include "qdnc/numerics.hpp"
#include "qdnc/states.hpp"

// Entropic quantum discord for states whose B subsystem is a qubit,
// computed by minimizing the post-measurement conditional entropy over
// von Neumann measurements on B. Logarithms are base 2 throughout, so the
// two-qubit maximally entangled state has discord exactly 1.

namespace qdnc {

// Bloch axis n = (sin t cos p, sin t sin p, cos t) of a two-outcome
// projective qubit measurement {|n><n|, 1-|n><n|}. Antipodal axes describe
// the same measurement.
struct MeasurementAxis {
  double theta = 0;  // in [0, pi]
  double phi = 0;    // in [0, 2 pi)

  Eigen::Vector2cd spinor() const;  // |n> = (cos t/2, e^{i p} sin t/2)
  Matrix projector_plus() const;    // |n><n|
  Eigen::Vector3d bloch() const;
};

struct DiscordResult {
  double value = 0;  // >= 0; values within 1e-9 of zero are clamped to 0
  MeasurementAxis argmin_axis;
  int iterations = 0;  // simplex iterations spent across all refinement starts
  bool converged = false;
};

// -sum lambda log2 lambda over the spectrum, with 0 log 0 = 0.
double von_neumann_entropy(const Matrix& rho);
double von_neumann_entropy(const DensityMatrix& rho);

// S(rho_a) + S(rho_b) - S(rho).
double mutual_information(const DensityMatrix& rho);

// S(rho | measurement) = sum_k p_k S(rho_k) where rho_k is the A marginal
// after outcome k of the axis measurement on B. Outcomes with probability
// below 1e-14 contribute nothing. Requires dim_b = 2.
double conditional_entropy_after(const DensityMatrix& rho,
                                 const MeasurementAxis& axis);

// min over axes of S(rho_b) - S(rho) + S(rho | axis), found by a
// 2000-point Fibonacci scan of the half-sphere followed by Nelder-Mead
// refinement from the best five lattice points (simplex diameter 1e-7).
// Requires dim_b = 2; converged=false reports a refinement that hit the
// iteration cap (the best value found is still returned).
DiscordResult discord_numeric(const DensityMatrix& rho);

}  // namespace qdnc
