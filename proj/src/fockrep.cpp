#include "isw/fockrep.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace isw::fock {

Cx bracket_value(int nu, const StatParams& p) {
  if (nu < 0 || nu > p.n + 1)
    throw std::out_of_range("bracket_value: nu outside [0, n+1]");
  Phase q = p.deformation();
  Cx num = Cx{1.0, 0.0} - q.pow(nu).to_complex();
  Cx den = Cx{1.0, 0.0} - q.to_complex();
  return num / den;
}

CMatrix creation_operator(const StatParams& p) {
  CMatrix a(p.dim());
  for (int nu = 0; nu < p.n; ++nu)
    a(nu + 1, nu) = std::sqrt(bracket_value(nu + 1, p));
  return a;
}

CMatrix annihilation_operator(const StatParams& p) {
  CMatrix b(p.dim());
  for (int nu = 1; nu <= p.n; ++nu)
    b(nu - 1, nu) = std::sqrt(bracket_value(nu, p));
  return b;
}

ConjugatePair conjugate_operators(const StatParams& p) {
  CMatrix b = annihilation_operator(p);
  return ConjugatePair{b.conj(), b.adjoint()};
}

double deformed_commutator_residual(const StatParams& p) {
  CMatrix a_dag = creation_operator(p);
  CMatrix b = annihilation_operator(p);
  Cx q = p.deformation().to_complex();
  CMatrix r = b * a_dag - q * (a_dag * b) - CMatrix::identity(p.dim());
  return r.frobenius_norm();
}

CVector build_state(int nu, const StatParams& p) {
  if (nu < 0 || nu > p.n)
    throw std::out_of_range("build_state: nu outside [0, n]");
  CMatrix a_dag = creation_operator(p);
  CVector v(p.dim());
  v[0] = 1.0;
  Cx norm{1.0, 0.0};
  for (int m = 1; m <= nu; ++m) {
    v = a_dag.apply(v);
    norm *= std::sqrt(bracket_value(m, p));
  }
  for (Cx& x : v) x /= norm;
  return v;
}

CMatrix b_operator(const StatParams& p) {
  CMatrix a_dag = creation_operator(p);
  CMatrix b = annihilation_operator(p);
  return b * a_dag - a_dag * b;
}

CMatrix number_from_b(const CMatrix& b_op, const StatParams& p) {
  CMatrix herm = (b_op + b_op.adjoint()) * Cx{0.5, 0.0};
  CMatrix num(p.dim());
  // (1 + alpha g)/(alpha g) = n + 1 exactly; keep the rational form visible.
  Rational ag = p.alpha() * Rational(p.g);
  double prefactor =
      ((Rational(1) + ag) / ag).to_double() / (2.0 * std::numbers::pi);
  for (int i = 0; i < p.dim(); ++i) {
    double y = herm(i, i).real();
    if (std::abs(y) > 1.0 + 1e-12)
      throw std::domain_error("number_from_b: arccos argument outside [-1, 1]");
    // arccos turns an eps-size error at y = +-1 into ~1e-8 of level error.
    // Exact entries reach +-1 only at nu = 0 and nu = (n+1)/2, and the next
    // level is O(1/n^2) away in y, so snapping the edge band is lossless.
    if (y > 1.0 - 1e-14) {
      y = 1.0;
    } else if (y < -1.0 + 1e-14) {
      y = -1.0;
    }
    num(i, i) = prefactor * std::acos(y);
  }
  return num;
}

CMatrix number_operator(const StatParams& p) {
  return number_from_b(b_operator(p), p);
}

CMatrix ideal_number_operator(const StatParams& p) {
  CMatrix num(p.dim());
  for (int nu = 0; nu <= p.n; ++nu) num(nu, nu) = static_cast<double>(nu);
  return num;
}

int folded_level(int nu, const StatParams& p) {
  if (nu < 0 || nu > p.n)
    throw std::out_of_range("folded_level: nu outside [0, n]");
  return 2 * nu <= p.n + 1 ? nu : p.n + 1 - nu;
}

}  // namespace isw::fock
