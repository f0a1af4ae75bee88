#pragma once

#include <cstdint>

#include "isw/matrix.hpp"
#include "isw/params.hpp"

namespace isw::qbracket {

// Deformed commutator [u, v] = u v - Q v u. Bilinear; [u, u] = (1 - Q) u^2.
CMatrix deformed_bracket(const CMatrix& u, const CMatrix& v, const StatParams& p);

// Frobenius norm of
//   [[u,v],w] + [[w,u],v] + [[v,w],u] + [[v,u],w] + [[u,w],v] + [[w,v],u]
//   - (1-Q)^2 (uvw + wuv + vwu + vuw + uwv + wvu).
// Expanding each double bracket gives every one of the six orderings the
// coefficient 1 - 2Q + Q^2, so the identity is exact and the residual is
// pure rounding.
double jacobi_sum_residual(const CMatrix& u, const CMatrix& v, const CMatrix& w,
                           const StatParams& p);

// Frobenius norm of
//   [[u,v],w] + [[w,u],v] + [[v,w],u] - [[v,u],w] - [[u,w],v] - [[w,v],u]
//   - (1-Q^2) (uvw + wuv + vwu - vuw - uwv - wvu).
// Same expansion, alternating signs: coefficients collapse to +-(1 - Q^2).
double jacobi_diff_residual(const CMatrix& u, const CMatrix& v, const CMatrix& w,
                            const StatParams& p);

// Deterministic pseudo-random matrix with entries Re, Im uniform in [-1, 1].
// Same (dim, seed) on any platform yields the same matrix: the engine output
// is pinned by the standard and the uint64 -> double mapping is explicit.
CMatrix random_operator(std::size_t dim, std::uint64_t seed);

}  // namespace isw::qbracket
