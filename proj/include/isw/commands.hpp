#pragma once

#include "isw/report.hpp"

namespace isw::cli {

// Winding <-> occupation labels and the exchange-phase equality per level.
Report cmd_map(const RunConfig& cfg);

// Ladder operators, bracket table, defining relation, B and both number
// operators for one (n, g).
Report cmd_fock(const RunConfig& cfg);

// Both six-term bracket identities over seeded random triples at dims 1..8.
Report cmd_jacobi(const RunConfig& cfg);

// Coherent-state table, normalization series, eigen and norm residuals.
Report cmd_coherent(const RunConfig& cfg);

// Analytic vs numeric loop phase per level plus the restricted winding list.
Report cmd_berry(const RunConfig& cfg);

// Every identity residual swept over n = 1..16, g in {1,2,4}, both signs,
// plus the numeric loop check against its discretization bound.
Report cmd_verify_all(const RunConfig& cfg);

}  // namespace isw::cli
