#pragma once

#include <cstdint>

#include "bandlim/types.hpp"

namespace bandlim {

// Mixture density p(x).
double pdf_eval(const GmmModel& model, const Vec& x);

// n i.i.d. draws; component by weight, then an isotropic Gaussian draw.
// Bit-identical output for equal seeds.
PointCloud sample(const GmmModel& model, long n, std::uint64_t seed);

// Entry i is 1 iff normal . X_i < offset.
Vec indicator_from_boundary(const PointCloud& cloud, const Hyperplane& plane);

// sup of p over the hyperplane: coarse grid over a patch covering all
// projected means +- 6 standard deviations, then golden-section refinement.
double sup_on_boundary(const GmmModel& model, const Hyperplane& plane);

// Integral of p^q over the hyperplane, q >= 1. Composite Gauss-Legendre
// with an h vs h/2 refinement check; relative error above 0.5% raises
// NumericalError. Supported for d <= 3.
double boundary_power_integral(const GmmModel& model, const Hyperplane& plane, double q);

// log of boundary_power_integral, usable when the value itself would
// underflow (large q).
double boundary_power_integral_log(const GmmModel& model, const Hyperplane& plane, double q);

// P(normal . X < offset), exact for isotropic components.
double region_mass(const GmmModel& model, const Hyperplane& plane);

// Orthonormal basis of the hyperplane's tangent space, d x (d-1), via
// Householder completion of the normal.
Mat tangent_basis(const Hyperplane& plane);

// The three-component 2-D mixture used by the stock experiments.
GmmModel reference_gmm();

}  // namespace bandlim
