#pragma once

#include <stdexcept>

#include "isw/phase.hpp"
#include "isw/rational.hpp"

namespace isw {

// Shared context for one statistics family: n is the maximum occupation of a
// single state, g the number of circles after which the braiding wave
// function closes. alpha = 1/(n g) is the statistical parameter and
// Q = e^{i 2 pi / (n+1)} the deformation phase; Q^{n+1} = 1.
struct StatParams {
  int n;
  int g;

  StatParams(int n_, int g_) : n(n_), g(g_) {
    if (n < 1) throw std::invalid_argument("StatParams: n must be >= 1");
    if (g < 1) throw std::invalid_argument("StatParams: g must be >= 1");
  }

  Rational alpha() const { return Rational(1, static_cast<long long>(n) * g); }
  Phase deformation() const { return Phase(Rational(1, n + 1)); }
  int dim() const { return n + 1; }
};

// Winding-number state label. Half-integer values appear for odd g, so the
// label is an exact rational, not an int.
struct WindingNumber {
  Rational k;
  bool operator==(const WindingNumber& o) const { return k == o.k; }
};

}  // namespace isw
