#pragma once

#include <vector>

#include "isw/params.hpp"

namespace isw::berry {

// Closed-form loop phase eta_nu = 2 pi (nu - n/2) picked up by |nu> under a
// full 2 pi rotation generated by J_z = N - (n/2) I.
double phase_analytic(int nu, const StatParams& p);

// Loop integral i * contour_integral <nu| U+(theta) dU/dtheta |nu> dtheta
// over theta in [0, 2 pi], U(theta) = exp(-i theta J_z) built from the ideal
// number operator. dU/dtheta is the central difference with step
// h = 2 pi / steps and the quadrature is the trapezoid rule, so the error is
// exactly 2 pi |w - sin(h w)/h| = (pi/3) |w|^3 h^2 + O(h^4) with w = nu - n/2.
double phase_numeric(int nu, const StatParams& p, int steps);

// Same integral with J_z built from the arccos-reconstructed (folded) number
// operator; occupations above (n+1)/2 then disagree with phase_analytic.
double phase_numeric_folded(int nu, const StatParams& p, int steps);

// eta expressed through the winding label: 2 pi (2k/g - n/2).
double phase_winding(const WindingNumber& k, const StatParams& p);

// Winding labels compatible with the loop phase: k_nu = (nu - n/2)/alpha for
// nu = 0..n. Negative entries signal the opposite braiding orientation.
std::vector<Rational> winding_restriction(const StatParams& p);

}  // namespace isw::berry
