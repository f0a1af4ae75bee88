#pragma once

#include "isw/params.hpp"

namespace isw::statmap {

// k = nu g / 2. Occupation nu must lie in [0, n].
WindingNumber occupation_to_winding(int nu, const StatParams& p);

// Inverse of the above: nu = 2k/g. Rejects labels whose occupation is not an
// integer in [0, n].
int winding_to_occupation(const WindingNumber& k, const StatParams& p);

// Winding-representation exchange phase e^{i 2 pi k alpha}.
Phase anyon_phase(const WindingNumber& k, const StatParams& p);

// Occupation-representation exchange phase e^{i 2 pi nu / (n+1)}.
Phase gentile_phase(int nu, const StatParams& p);

// Max over nu in [0, n] of the complex distance between the winding phase
// e^{i 2 pi k alpha} (k = nu g/2) and the occupation phase raised to
// (n+1)/(2n) by exponent arithmetic. Both exponents reduce to nu/(2n)
// exactly, so the residual is zero up to rounding.
double phase_equality_residual(const StatParams& p);

}  // namespace isw::statmap
