#pragma once

#include <stdexcept>
#include <vector>

#include "lpolya/rational.hpp"

namespace lpolya {

using DirectionQ = std::vector<Rat>;     // exact direction, not all zero
using DirectionF = std::vector<double>;  // floating direction

// Exact central-section value sigma(w) for a rational direction: the scaled
// (n-1)-volume of the central hyperplane cut of the unit cube orthogonal to
// w, evaluated through the piecewise-polynomial density of a weighted sum of
// uniforms. Sign flips and zero coordinates drop out; the effective
// dimension must be >= 2 and <= 25 (the signed subset sum has 2^n terms).
// Homogeneous of degree -1: sigma(c w) = sigma(w)/c exactly.
Rat sigma_exact(const DirectionQ& w);

// Oscillatory quadrature for the same section integral on a floating
// direction: |result - sigma(v)| <= tol * max(1, sigma(v)). Panels are cut
// at the zeros of the fastest sinc factor; the truncation point comes from
// the product tail bound.
double sigma_quadrature(const DirectionF& v, double tol);

// Partial derivative of sigma at v along coordinate j (0-based). Requires
// at least three nonzero coordinates (differentiability) and v[j] != 0.
double grad_sigma_quadrature(const DirectionF& v, int j, double tol);

// Per-coordinate residuals of the criticality characterisation at a unit
// vector u (|u| = 1 within 1e-12, >= 3 nonzero coordinates): entry j is
// RHS_j - sigma(u) where RHS_j is the fixed-coordinate section integral.
// All residuals vanish, up to quadrature error, exactly at critical
// directions.
std::vector<double> critical_residual(const DirectionF& u, double tol);

// Entry (j1, j2) of the Hessian block of the constrained section problem at
// v, 0-based indices: the diagonal integrand for j1 == j2, the mixed-partial
// one otherwise. Requires at least four nonzero coordinates (twice
// differentiable); vanishing-coordinate limits are applied where v_j = 0.
double hessian_entries_numeric(const DirectionF& v, int j1, int j2, double tol);

struct QuadratureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace lpolya
