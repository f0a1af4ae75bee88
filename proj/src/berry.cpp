#include "isw/berry.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "isw/fockrep.hpp"

namespace isw::berry {

namespace {

// i * contour_integral conj(u(theta)) * (u(theta+h) - u(theta-h))/(2h) dtheta
// for u(theta) = e^{-i theta w}: the diagonal matrix element of the loop
// integrand for a level with J_z eigenvalue w.
double loop_integral(double w, int steps) {
  if (steps < 16) throw std::invalid_argument("loop_integral: steps must be >= 16");
  const double h = 2.0 * std::numbers::pi / steps;
  const Cx rot = std::polar(1.0, -h * w);
  // Rolling nodes u(theta - h), u(theta), u(theta + h), advanced by one
  // rotation per step and re-anchored periodically to stop drift.
  Cx um = std::polar(1.0, h * w);
  Cx u0{1.0, 0.0};
  Cx up = rot;
  double sum = 0.0;
  for (int j = 0; j <= steps; ++j) {
    if (j % 4096 == 0) {
      double theta = j * h;
      um = std::polar(1.0, -(theta - h) * w);
      u0 = std::polar(1.0, -theta * w);
      up = std::polar(1.0, -(theta + h) * w);
    }
    Cx integrand = Cx{0.0, 1.0} * std::conj(u0) * (up - um) / (2.0 * h);
    double weight = (j == 0 || j == steps) ? 0.5 : 1.0;
    sum += weight * integrand.real();
    um = u0;
    u0 = up;
    up *= rot;
  }
  return sum * h;
}

double loop_phase(const CMatrix& number_op, int nu, const StatParams& p, int steps) {
  if (nu < 0 || nu > p.n)
    throw std::out_of_range("berry loop: nu outside [0, n]");
  double w = number_op(nu, nu).real() - p.n / 2.0;
  return loop_integral(w, steps);
}

}  // namespace

double phase_analytic(int nu, const StatParams& p) {
  if (nu < 0 || nu > p.n)
    throw std::out_of_range("phase_analytic: nu outside [0, n]");
  return 2.0 * std::numbers::pi * (nu - p.n / 2.0);
}

double phase_numeric(int nu, const StatParams& p, int steps) {
  return loop_phase(fock::ideal_number_operator(p), nu, p, steps);
}

double phase_numeric_folded(int nu, const StatParams& p, int steps) {
  return loop_phase(fock::number_operator(p), nu, p, steps);
}

double phase_winding(const WindingNumber& k, const StatParams& p) {
  // 2k/g - n/2, exact before the final float conversion.
  Rational occ = Rational(2) * k.k / Rational(p.g);
  return 2.0 * std::numbers::pi * (occ - Rational(p.n, 2)).to_double();
}

std::vector<Rational> winding_restriction(const StatParams& p) {
  std::vector<Rational> ks;
  ks.reserve(p.dim());
  for (int nu = 0; nu <= p.n; ++nu)
    ks.push_back((Rational(nu) - Rational(p.n, 2)) / p.alpha());
  return ks;
}

}  // namespace isw::berry
