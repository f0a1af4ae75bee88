#pragma once

#include <cmath>
#include <complex>
#include <numbers>

#include "isw/rational.hpp"

namespace isw {

// Unit complex number e^{i 2 pi r} carried as the exact rational exponent r,
// stored reduced to [0, 1). Products add exponents and powers scale them, so
// chains of phase factors stay exact until to_complex(). Raising to a
// fractional power acts on the exponent directly, which is what the winding
// phase relations require; the principal branch would give a different (and
// wrong) value once the exponent passes 1/2.
class Phase {
 public:
  Phase() = default;  // identity phase
  explicit Phase(const Rational& r) : r_(r.mod1()) {}

  const Rational& exponent() const { return r_; }

  Phase operator*(const Phase& o) const { return Phase(r_ + o.r_); }
  Phase pow(long long e) const { return Phase(r_ * Rational(e)); }
  Phase pow(const Rational& e) const { return Phase(r_ * e); }
  Phase conj() const { return Phase(-r_); }

  bool operator==(const Phase& o) const { return r_ == o.r_; }

  std::complex<double> to_complex() const {
    // Quarter-turn exponents map to exact unit values; the n=1 (Fermi) ladder
    // matrices and the nu = (n+1)/2 bracket then come out integer-exact.
    if (r_ == Rational(0)) return {1.0, 0.0};
    if (r_ == Rational(1, 4)) return {0.0, 1.0};
    if (r_ == Rational(1, 2)) return {-1.0, 0.0};
    if (r_ == Rational(3, 4)) return {0.0, -1.0};
    const double theta = 2.0 * std::numbers::pi * r_.to_double();
    return {std::cos(theta), std::sin(theta)};
  }

 private:
  Rational r_;  // exponent in turns, reduced to [0, 1)
};

}  // namespace isw
