#pragma once

#include <vector>

#include "isw/matrix.hpp"
#include "isw/params.hpp"

namespace isw::grassmann {

// Branch choice for the chi commutation rules: the exchange factor is Q^{+nu}
// or Q^{-nu}, and every derived quantity (gamma, coherent state) follows it.
enum class Sign { plus, minus };

inline int sign_value(Sign s) { return s == Sign::plus ? +1 : -1; }

// Polynomial in the two nilpotent generators, stored normal ordered: the
// coefficient grid c[p][q] multiplies cbar^p c^q with 0 <= p, q <= max_power
// and any power above max_power truncated to zero. No exchange rule between
// the generators is assumed; products just merge exponents, which is all the
// diagonal combination zeta = cbar c requires.
class GrassmannPoly {
 public:
  explicit GrassmannPoly(int max_power);

  static GrassmannPoly one(int max_power);
  // c * zeta^j with zeta = cbar c (diagonal monomial).
  static GrassmannPoly zeta_power(int max_power, int j, Cx c);

  int max_power() const { return max_power_; }

  Cx coeff(int p, int q) const;
  void set_coeff(int p, int q, Cx c);

  GrassmannPoly operator+(const GrassmannPoly& o) const;
  GrassmannPoly operator-(const GrassmannPoly& o) const;
  GrassmannPoly operator*(const GrassmannPoly& o) const;
  GrassmannPoly operator*(Cx s) const;

  // Largest coefficient distance to another polynomial.
  double max_coeff_distance(const GrassmannPoly& o) const;
  // Largest coefficient distance to the unit element.
  double deviation_from_one() const;

 private:
  int max_power_;
  std::vector<Cx> c_;  // (max_power+1)^2 grid, row p, column q
};

// Exchange factor for moving chi through the occupation-nu state:
// chi |nu> = Q^{+-nu} |nu> chi.
Phase chi_past_state(int nu, Sign s, const StatParams& p);

// Exchange factor for moving chi through m creation operators:
// chi (a+)^m = Q^{+-m} (a+)^m chi.
Phase chi_past_operator(int m, Sign s, const StatParams& p);

// Coherent-state expansion coefficient
//   gamma(nu) = prod_{m=0}^{nu-1} Q^{+-m} / sqrt([m+1]),
// the unique solution (gamma(0) = 1) of
//   gamma(nu+1)/gamma(nu) = Q^{+-nu} / sqrt([nu+1]).
Cx gamma_coefficient(int nu, Sign s, const StatParams& p);

// |chi> = M sum_nu gamma(nu) |nu> chi^nu. levels holds the gamma table;
// normalization is the zeta series M below.
struct CoherentState {
  std::vector<Cx> levels;
  GrassmannPoly normalization;
};

CoherentState make_coherent_state(Sign s, const StatParams& p);

// Max coefficient mismatch between b|chi> and chi|chi>, both expanded as
// formal sums of |level> chi^power terms. With nilpotency enforced the two
// sides agree term by term; with it disabled the extra chi^{n+1} term on the
// chi side survives and the residual is |gamma(n)| exactly, demonstrating
// that the eigenstate property needs the truncation.
double eigen_residual(const CoherentState& st, Sign s, const StatParams& p,
                      bool enforce_nilpotency = true);

// M = S^{-1/2} as a truncated power series in zeta, where
// S = sum_nu |gamma(nu)|^2 zeta^nu. Solved order by order so that
// M * M * S = 1 in the truncated algebra.
GrassmannPoly normalization_series(Sign s, const StatParams& p);

// <chi|chi> = M^2 sum_nu |gamma(nu)|^2 zeta^nu; equals the unit element.
GrassmannPoly inner_product_norm(Sign s, const StatParams& p);

}  // namespace isw::grassmann
