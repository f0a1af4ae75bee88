#include "isw/statmap.hpp"

#include <algorithm>
#include <stdexcept>

namespace isw::statmap {

WindingNumber occupation_to_winding(int nu, const StatParams& p) {
  if (nu < 0 || nu > p.n)
    throw std::out_of_range("occupation_to_winding: nu outside [0, n]");
  return WindingNumber{Rational(nu) * Rational(p.g, 2)};
}

int winding_to_occupation(const WindingNumber& k, const StatParams& p) {
  Rational nu = Rational(2) * k.k / Rational(p.g);
  if (!nu.is_integer())
    throw std::invalid_argument("winding_to_occupation: 2k/g is not an integer");
  long long v = nu.num();
  if (v < 0 || v > p.n)
    throw std::out_of_range("winding_to_occupation: occupation outside [0, n]");
  return static_cast<int>(v);
}

Phase anyon_phase(const WindingNumber& k, const StatParams& p) {
  return Phase(k.k * p.alpha());
}

Phase gentile_phase(int nu, const StatParams& p) {
  if (nu < 0 || nu > p.n)
    throw std::out_of_range("gentile_phase: nu outside [0, n]");
  return Phase(Rational(nu, p.n + 1));
}

double phase_equality_residual(const StatParams& p) {
  double worst = 0.0;
  for (int nu = 0; nu <= p.n; ++nu) {
    Phase lhs = anyon_phase(occupation_to_winding(nu, p), p);
    // Occupation phase raised to (n+1)/(2n): exponent arithmetic, not the
    // principal branch.
    Phase rhs = gentile_phase(nu, p).pow(Rational(p.n + 1, 2LL * p.n));
    worst = std::max(worst, std::abs(lhs.to_complex() - rhs.to_complex()));
  }
  return worst;
}

}  // namespace isw::statmap
