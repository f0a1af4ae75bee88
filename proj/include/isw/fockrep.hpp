#pragma once

#include "isw/matrix.hpp"
#include "isw/params.hpp"

namespace isw::fock {

// Deformed occupation weight [nu] = (1 - Q^nu)/(1 - Q), computed from exact
// phase exponents and converted to complex at the end. [0] = 0, [1] = 1,
// [n+1] = 0 (the top of the tower closes itself). Valid for nu in [0, n+1].
Cx bracket_value(int nu, const StatParams& p);

// Creation operator a+ on the (n+1)-dimensional tower:
// a+ e_nu = sqrt([nu+1]) e_{nu+1}, principal square root.
CMatrix creation_operator(const StatParams& p);

// Annihilation partner b with b e_nu = sqrt([nu]) e_{nu-1}. Note b is the
// plain transpose of a+, not the conjugate transpose: the deformed weights
// are complex, and the defining relation below needs the unconjugated pair.
CMatrix annihilation_operator(const StatParams& p);

// Entrywise conjugates of the pair above: a = conj(b), b+ = adjoint(b).
struct ConjugatePair {
  CMatrix a;
  CMatrix b_dagger;
};
ConjugatePair conjugate_operators(const StatParams& p);

// Frobenius norm of b a+ - Q a+ b - I. The relation holds exactly per level
// ([nu+1] - Q [nu] = 1, and the top row closes via [n+1] = 0), so the
// residual is pure rounding.
double deformed_commutator_residual(const StatParams& p);

// (a+)^nu e_0 normalized by the running product of sqrt([m]), m = 1..nu.
// The quotient cancels factor by factor, so the result is the basis vector
// e_nu to rounding.
CVector build_state(int nu, const StatParams& p);

// B = b a+ - a+ b = diag(Q^nu), unitary and diagonal.
CMatrix b_operator(const StatParams& p);

// Number operator reconstructed from B: (n+1)/(2 pi) * arccos((B + B+)/2),
// arccos taken entrywise on the real diagonal. arccos folds occupations
// above (n+1)/2 down to n+1-nu; the unfolded count is ideal_number_operator.
CMatrix number_operator(const StatParams& p);

// Same reconstruction applied to a caller-supplied B; throws domain_error if
// a diagonal entry of (B + B+)/2 leaves [-1, 1] by more than 1e-12 (a broken
// B). Entries within 1e-14 of +-1 are snapped onto the edge before arccos,
// which would otherwise blow eps-size noise up to ~1e-8 of level error.
CMatrix number_from_b(const CMatrix& b_op, const StatParams& p);

// diag(0, 1, ..., n): the occupation count itself.
CMatrix ideal_number_operator(const StatParams& p);

// Occupation the arccos reconstruction reports for level nu: nu itself up to
// (n+1)/2, folded to n+1-nu above.
int folded_level(int nu, const StatParams& p);

}  // namespace isw::fock
