#include "isw/grassmann.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "isw/fockrep.hpp"

namespace isw::grassmann {

GrassmannPoly::GrassmannPoly(int max_power)
    : max_power_(max_power),
      c_(static_cast<std::size_t>(max_power + 1) * (max_power + 1)) {
  if (max_power < 0) throw std::invalid_argument("GrassmannPoly: negative max power");
}

GrassmannPoly GrassmannPoly::one(int max_power) {
  GrassmannPoly r(max_power);
  r.set_coeff(0, 0, Cx{1.0, 0.0});
  return r;
}

GrassmannPoly GrassmannPoly::zeta_power(int max_power, int j, Cx c) {
  GrassmannPoly r(max_power);
  if (j <= max_power) r.set_coeff(j, j, c);
  return r;
}

Cx GrassmannPoly::coeff(int p, int q) const {
  if (p < 0 || q < 0 || p > max_power_ || q > max_power_)
    throw std::out_of_range("GrassmannPoly::coeff: exponent out of range");
  return c_[static_cast<std::size_t>(p) * (max_power_ + 1) + q];
}

void GrassmannPoly::set_coeff(int p, int q, Cx c) {
  if (p < 0 || q < 0 || p > max_power_ || q > max_power_)
    throw std::out_of_range("GrassmannPoly::set_coeff: exponent out of range");
  c_[static_cast<std::size_t>(p) * (max_power_ + 1) + q] = c;
}

GrassmannPoly GrassmannPoly::operator+(const GrassmannPoly& o) const {
  GrassmannPoly r(max_power_);
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] + o.c_[i];
  return r;
}

GrassmannPoly GrassmannPoly::operator-(const GrassmannPoly& o) const {
  GrassmannPoly r(max_power_);
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] - o.c_[i];
  return r;
}

GrassmannPoly GrassmannPoly::operator*(const GrassmannPoly& o) const {
  // Exponents merge; anything past max_power vanishes by nilpotency.
  GrassmannPoly r(max_power_);
  int w = max_power_ + 1;
  for (int p1 = 0; p1 < w; ++p1)
    for (int q1 = 0; q1 < w; ++q1) {
      Cx c1 = c_[static_cast<std::size_t>(p1) * w + q1];
      if (c1 == Cx{}) continue;
      for (int p2 = 0; p2 + p1 < w; ++p2)
        for (int q2 = 0; q2 + q1 < w; ++q2) {
          Cx c2 = o.c_[static_cast<std::size_t>(p2) * w + q2];
          if (c2 == Cx{}) continue;
          r.c_[static_cast<std::size_t>(p1 + p2) * w + (q1 + q2)] += c1 * c2;
        }
    }
  return r;
}

GrassmannPoly GrassmannPoly::operator*(Cx s) const {
  GrassmannPoly r(max_power_);
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] * s;
  return r;
}

double GrassmannPoly::max_coeff_distance(const GrassmannPoly& o) const {
  double m = 0.0;
  for (std::size_t i = 0; i < c_.size(); ++i) m = std::max(m, std::abs(c_[i] - o.c_[i]));
  return m;
}

double GrassmannPoly::deviation_from_one() const {
  return max_coeff_distance(one(max_power_));
}

Phase chi_past_state(int nu, Sign s, const StatParams& p) {
  if (nu < 0 || nu > p.n)
    throw std::out_of_range("chi_past_state: nu outside [0, n]");
  return p.deformation().pow(static_cast<long long>(sign_value(s)) * nu);
}

Phase chi_past_operator(int m, Sign s, const StatParams& p) {
  if (m < 0 || m > p.n)
    throw std::out_of_range("chi_past_operator: m outside [0, n]");
  return p.deformation().pow(static_cast<long long>(sign_value(s)) * m);
}

Cx gamma_coefficient(int nu, Sign s, const StatParams& p) {
  if (nu < 0 || nu > p.n)
    throw std::out_of_range("gamma_coefficient: nu outside [0, n]");
  // Phase part stays exact: prod_m Q^{+-m} = Q^{+-nu(nu-1)/2}.
  Phase phase;
  Cx magnitude{1.0, 0.0};
  for (int m = 0; m < nu; ++m) {
    phase = phase * p.deformation().pow(static_cast<long long>(sign_value(s)) * m);
    magnitude /= std::sqrt(fock::bracket_value(m + 1, p));
  }
  return phase.to_complex() * magnitude;
}

CoherentState make_coherent_state(Sign s, const StatParams& p) {
  CoherentState st{std::vector<Cx>(p.dim()), normalization_series(s, p)};
  for (int nu = 0; nu <= p.n; ++nu) st.levels[nu] = gamma_coefficient(nu, s, p);
  return st;
}

double eigen_residual(const CoherentState& st, Sign s, const StatParams& p,
                      bool enforce_nilpotency) {
  // Both sides live on the grid (level, chi power); power n+1 only exists
  // when nilpotency is switched off.
  int powers = p.n + 2;
  std::vector<Cx> lhs(static_cast<std::size_t>(p.dim()) * powers);
  std::vector<Cx> rhs(lhs.size());
  auto at = [&](std::vector<Cx>& g, int level, int power) -> Cx& {
    return g[static_cast<std::size_t>(level) * powers + power];
  };

  // b |chi>: b drops the level and keeps the chi power.
  for (int nu = 1; nu <= p.n; ++nu)
    at(lhs, nu - 1, nu) = st.levels[nu] * std::sqrt(fock::bracket_value(nu, p));

  // chi |chi>: chi hops past |nu> picking up Q^{+-nu}, raising the power.
  for (int nu = 0; nu <= p.n; ++nu) {
    int power = nu + 1;
    if (power > p.n && enforce_nilpotency) continue;
    at(rhs, nu, power) = st.levels[nu] * chi_past_state(nu, s, p).to_complex();
  }

  double worst = 0.0;
  for (std::size_t i = 0; i < lhs.size(); ++i)
    worst = std::max(worst, std::abs(lhs[i] - rhs[i]));
  return worst;
}

GrassmannPoly normalization_series(Sign s, const StatParams& p) {
  // S = 1 + sum_{l=1..n} |gamma(l)|^2 zeta^l; solve t with t*t*S = 1
  // order by order (t_0 = 1, coefficients real).
  std::vector<double> sv(p.dim());
  sv[0] = 1.0;
  for (int l = 1; l <= p.n; ++l) sv[l] = std::norm(gamma_coefficient(l, s, p));

  std::vector<double> t(p.dim());
  t[0] = 1.0;
  std::vector<double> tt(p.dim());  // running coefficients of t*t
  tt[0] = 1.0;
  for (int j = 1; j <= p.n; ++j) {
    // (t*t*S)_j = 0  =>  (t*t)_j = -sum_{i<j} (t*t)_i s_{j-i}
    double ttj = 0.0;
    for (int i = 0; i < j; ++i) ttj -= tt[i] * sv[j - i];
    // (t*t)_j = 2 t_j + sum_{a=1..j-1} t_a t_{j-a}
    double inner = 0.0;
    for (int a = 1; a < j; ++a) inner += t[a] * t[j - a];
    t[j] = (ttj - inner) / 2.0;
    tt[j] = ttj;
  }

  GrassmannPoly m(p.n);
  for (int j = 0; j <= p.n; ++j) m.set_coeff(j, j, Cx{t[j], 0.0});
  return m;
}

GrassmannPoly inner_product_norm(Sign s, const StatParams& p) {
  GrassmannPoly big_s(p.n);
  big_s.set_coeff(0, 0, Cx{1.0, 0.0});
  for (int l = 1; l <= p.n; ++l)
    big_s.set_coeff(l, l, Cx{std::norm(gamma_coefficient(l, s, p)), 0.0});
  GrassmannPoly m = normalization_series(s, p);
  return m * m * big_s;
}

}  // namespace isw::grassmann
