#include "isw/commands.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "isw/berry.hpp"
#include "isw/fockrep.hpp"
#include "isw/qbracket.hpp"
#include "isw/statmap.hpp"

namespace isw::cli {

namespace {

using nlohmann::ordered_json;

ordered_json cx_json(const Cx& z) {
  ordered_json j;
  j["re"] = z.real();
  j["im"] = z.imag();
  return j;
}

ordered_json phase_json(const Phase& ph) {
  ordered_json j = cx_json(ph.to_complex());
  j["exponent"] = ph.exponent().str();
  return j;
}

ordered_json matrix_json(const CMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(cx_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// One engine seed per (run seed, cell); collision-resistant so every triple
// in a sweep is independent yet reproducible.
std::uint64_t triple_seed(std::uint64_t seed, int n, int dim, int trial, int slot) {
  std::uint64_t pack = (static_cast<std::uint64_t>(n) << 48) ^
                       (static_cast<std::uint64_t>(dim) << 40) ^
                       (static_cast<std::uint64_t>(trial) << 8) ^
                       static_cast<std::uint64_t>(slot);
  return splitmix64(seed ^ pack);
}

// Max inf-norm distance between build_state(nu) and e_nu over all nu.
double state_construction_residual(const StatParams& p) {
  double worst = 0.0;
  for (int nu = 0; nu <= p.n; ++nu) {
    CVector v = fock::build_state(nu, p);
    for (int i = 0; i <= p.n; ++i) {
      Cx expect = (i == nu) ? Cx{1.0, 0.0} : Cx{};
      worst = std::max(worst, std::abs(v[i] - expect));
    }
  }
  return worst;
}

double conjugate_relation_residual(const StatParams& p) {
  auto [a, b_dag] = fock::conjugate_operators(p);
  Cx qbar = p.deformation().conj().to_complex();
  CMatrix r = a * b_dag - qbar * (b_dag * a) - CMatrix::identity(p.dim());
  return r.frobenius_norm();
}

double number_spectrum_residual(const StatParams& p) {
  CMatrix num = fock::number_operator(p);
  double worst = 0.0;
  for (int nu = 0; nu <= p.n; ++nu)
    worst = std::max(worst, std::abs(num(nu, nu) - Cx{static_cast<double>(fock::folded_level(nu, p)), 0.0}));
  return worst;
}

// Discretization bound the loop integral must meet at step h = 2 pi / steps.
double berry_numeric_bound(int n, int steps) {
  double h = 2.0 * std::numbers::pi / steps;
  return std::max(1e-6, n * h * h);
}

}  // namespace

Report cmd_map(const RunConfig& cfg) {
  validate_config(cfg, true);
  StatParams p(cfg.n, cfg.g);
  Report rep;
  rep.command = "map";
  rep.params = cfg;

  double worst = 0.0;
  for (int nu = 0; nu <= p.n; ++nu) {
    WindingNumber k = statmap::occupation_to_winding(nu, p);
    Phase anyon = statmap::anyon_phase(k, p);
    Phase gentile = statmap::gentile_phase(nu, p);
    Phase scaled = gentile.pow(Rational(p.n + 1, 2LL * p.n));
    double dist = std::abs(anyon.to_complex() - scaled.to_complex());
    worst = std::max(worst, dist);

    ordered_json row;
    row["nu"] = nu;
    row["k"] = k.k.str();
    row["roundtrip_nu"] = statmap::winding_to_occupation(k, p);
    row["anyon_phase"] = phase_json(anyon);
    row["gentile_phase"] = phase_json(gentile);
    row["distance"] = dist;
    rep.rows.push_back(row);
  }
  rep.residuals.emplace_back("phase_equality", worst);
  rep.passed = worst < cfg.tol;
  return rep;
}

Report cmd_fock(const RunConfig& cfg) {
  validate_config(cfg, true);
  StatParams p(cfg.n, cfg.g);
  Report rep;
  rep.command = "fock";
  rep.params = cfg;

  ordered_json brackets = ordered_json::array();
  for (int nu = 0; nu <= p.n + 1; ++nu) {
    Cx v = fock::bracket_value(nu, p);
    ordered_json row;
    row["nu"] = nu;
    row["value"] = cx_json(v);
    row["modulus"] = std::abs(v);
    brackets.push_back(row);
  }
  rep.rows.push_back({{"label", "bracket_table"}, {"values", brackets}});

  CMatrix a_dag = fock::creation_operator(p);
  CMatrix b = fock::annihilation_operator(p);
  auto [a, b_dag] = fock::conjugate_operators(p);
  rep.rows.push_back({{"label", "creation"}, {"matrix", matrix_json(a_dag)}});
  rep.rows.push_back({{"label", "annihilation_b"}, {"matrix", matrix_json(b)}});
  rep.rows.push_back({{"label", "a"}, {"matrix", matrix_json(a)}});
  rep.rows.push_back({{"label", "b_dagger"}, {"matrix", matrix_json(b_dag)}});

  CMatrix b_op = fock::b_operator(p);
  ordered_json b_spec = ordered_json::array();
  for (int nu = 0; nu <= p.n; ++nu) {
    // B = diag(Q^nu); the exponent is exact.
    ordered_json e = cx_json(b_op(nu, nu));
    e["exponent"] = p.deformation().pow(nu).exponent().str();
    b_spec.push_back(e);
  }
  Cx trace{};
  for (int nu = 0; nu <= p.n; ++nu) trace += b_op(nu, nu);
  rep.rows.push_back({{"label", "b_operator"},
                      {"matrix", matrix_json(b_op)},
                      {"spectrum", b_spec},
                      {"trace", cx_json(trace)}});

  CMatrix num = fock::number_operator(p);
  CMatrix ideal = fock::ideal_number_operator(p);
  ordered_json folded = ordered_json::array();
  ordered_json ideal_spec = ordered_json::array();
  ordered_json folded_levels = ordered_json::array();
  for (int nu = 0; nu <= p.n; ++nu) {
    folded.push_back(num(nu, nu).real());
    ideal_spec.push_back(ideal(nu, nu).real());
    if (fock::folded_level(nu, p) != nu) folded_levels.push_back(nu);
  }
  rep.rows.push_back({{"label", "number_spectrum"},
                      {"folded", folded},
                      {"ideal", ideal_spec},
                      {"folded_levels", folded_levels}});

  double unitarity = (b_op * b_op.adjoint() - CMatrix::identity(p.dim())).frobenius_norm();
  rep.residuals.emplace_back("deformed_commutator", fock::deformed_commutator_residual(p));
  rep.residuals.emplace_back("conjugate_relation", conjugate_relation_residual(p));
  rep.residuals.emplace_back("state_construction", state_construction_residual(p));
  rep.residuals.emplace_back("b_diagonality", b_op.off_diagonal_norm());
  rep.residuals.emplace_back("b_unitarity", unitarity);
  rep.residuals.emplace_back("number_spectrum", number_spectrum_residual(p));

  rep.passed = true;
  for (const auto& [name, value] : rep.residuals) rep.passed = rep.passed && value < cfg.tol;
  return rep;
}

Report cmd_jacobi(const RunConfig& cfg) {
  validate_config(cfg, true);
  StatParams p(cfg.n, cfg.g);
  Report rep;
  rep.command = "jacobi";
  rep.params = cfg;

  double worst_sum = 0.0;
  double worst_diff = 0.0;
  for (int dim = 1; dim <= 8; ++dim) {
    double dim_sum = 0.0;
    double dim_diff = 0.0;
    for (int t = 0; t < cfg.trials; ++t) {
      CMatrix u = qbracket::random_operator(dim, triple_seed(cfg.seed, p.n, dim, t, 0));
      CMatrix v = qbracket::random_operator(dim, triple_seed(cfg.seed, p.n, dim, t, 1));
      CMatrix w = qbracket::random_operator(dim, triple_seed(cfg.seed, p.n, dim, t, 2));
      dim_sum = std::max(dim_sum, qbracket::jacobi_sum_residual(u, v, w, p));
      dim_diff = std::max(dim_diff, qbracket::jacobi_diff_residual(u, v, w, p));
    }
    ordered_json row;
    row["dim"] = dim;
    row["trials"] = cfg.trials;
    row["jacobi_sum_max"] = dim_sum;
    row["jacobi_diff_max"] = dim_diff;
    rep.rows.push_back(row);
    worst_sum = std::max(worst_sum, dim_sum);
    worst_diff = std::max(worst_diff, dim_diff);
  }
  rep.residuals.emplace_back("jacobi_sum", worst_sum);
  rep.residuals.emplace_back("jacobi_diff", worst_diff);
  rep.passed = worst_sum < cfg.tol && worst_diff < cfg.tol;
  return rep;
}

Report cmd_coherent(const RunConfig& cfg) {
  validate_config(cfg, true);
  StatParams p(cfg.n, cfg.g);
  Report rep;
  rep.command = "coherent";
  rep.params = cfg;

  grassmann::CoherentState st = grassmann::make_coherent_state(cfg.sign, p);

  ordered_json gammas = ordered_json::array();
  for (int nu = 0; nu <= p.n; ++nu) {
    ordered_json row;
    row["nu"] = nu;
    row["gamma"] = cx_json(st.levels[nu]);
    row["modulus"] = std::abs(st.levels[nu]);
    gammas.push_back(row);
  }
  rep.rows.push_back({{"label", "gamma"}, {"values", gammas}});

  ordered_json mcoeff = ordered_json::array();
  for (int j = 0; j <= p.n; ++j) mcoeff.push_back(st.normalization.coeff(j, j).real());
  rep.rows.push_back({{"label", "normalization"}, {"zeta_coefficients", mcoeff}});

  grassmann::GrassmannPoly norm = grassmann::inner_product_norm(cfg.sign, p);
  ordered_json ncoeff = ordered_json::array();
  for (int j = 0; j <= p.n; ++j) ncoeff.push_back(norm.coeff(j, j).real());
  rep.rows.push_back({{"label", "norm"}, {"zeta_coefficients", ncoeff}});

  double eigen = grassmann::eigen_residual(st, cfg.sign, p);
  double control = grassmann::eigen_residual(st, cfg.sign, p, false);
  rep.rows.push_back({{"label", "truncation_control"},
                      {"residual_without_nilpotency", control},
                      {"gamma_top_modulus", std::abs(st.levels[p.n])}});

  double norm_dev = norm.deviation_from_one();
  rep.residuals.emplace_back("eigen_residual", eigen);
  rep.residuals.emplace_back("norm_deviation", norm_dev);
  rep.passed = eigen < cfg.tol && norm_dev < cfg.tol;
  return rep;
}

Report cmd_berry(const RunConfig& cfg) {
  validate_config(cfg, true);
  StatParams p(cfg.n, cfg.g);
  Report rep;
  rep.command = "berry";
  rep.params = cfg;

  std::vector<Rational> ks = berry::winding_restriction(p);
  double worst = 0.0;
  ordered_json klist = ordered_json::array();
  for (int nu = 0; nu <= p.n; ++nu) {
    double analytic = berry::phase_analytic(nu, p);
    double numeric = cfg.use_folded_number_operator
                         ? berry::phase_numeric_folded(nu, p, cfg.steps)
                         : berry::phase_numeric(nu, p, cfg.steps);
    double diff = std::abs(numeric - analytic);
    worst = std::max(worst, diff);

    ordered_json row;
    row["nu"] = nu;
    row["eta_analytic"] = analytic;
    row["eta_numeric"] = numeric;
    row["difference"] = diff;
    row["k_restricted"] = ks[nu].str();
    rep.rows.push_back(row);
    klist.push_back(ks[nu].str());
  }
  rep.rows.push_back({{"label", "winding_restriction"}, {"values", klist}});

  rep.residuals.emplace_back("berry_max_difference", worst);
  rep.passed = worst < cfg.tol;
  return rep;
}

Report cmd_verify_all(const RunConfig& cfg) {
  validate_config(cfg, false);
  Report rep;
  rep.command = "verify-all";
  rep.params = cfg;

  struct Check {
    std::string name;
    double worst = 0.0;
    double bound = 0.0;
    std::string worst_at;
  };
  auto track = [](Check& c, double value, const std::string& at) {
    if (value >= c.worst) {
      c.worst = value;
      c.worst_at = at;
    }
  };

  Check phase_eq{"phase_equality", 0.0, cfg.tol, ""};
  Check commutator{"deformed_commutator", 0.0, cfg.tol, ""};
  Check conjugate{"conjugate_relation", 0.0, cfg.tol, ""};
  Check states{"state_construction", 0.0, cfg.tol, ""};
  Check b_diag{"b_diagonality", 0.0, cfg.tol, ""};
  Check b_unit{"b_unitarity", 0.0, cfg.tol, ""};
  Check num_spec{"number_spectrum", 0.0, cfg.tol, ""};
  Check jac_sum{"jacobi_sum", 0.0, cfg.tol, ""};
  Check jac_diff{"jacobi_diff", 0.0, cfg.tol, ""};
  Check eigen{"eigen_residual", 0.0, cfg.tol, ""};
  Check norm_dev{"norm_deviation", 0.0, cfg.tol, ""};
  Check berry_exact{"berry_winding_consistency", 0.0, cfg.tol, ""};
  // The loop integral carries an irreducible discretization error, so it is
  // measured against its own step-dependent bound rather than tol: the check
  // value is the worst error-to-bound ratio and must stay below 1.
  Check berry_num{"berry_numeric_vs_bound", 0.0, 1.0, ""};

  const int signs[2] = {0, 1};
  for (int n = 1; n <= 16; ++n) {
    for (int g : {1, 2, 4}) {
      StatParams p(n, g);
      std::string cell = "n=" + std::to_string(n) + " g=" + std::to_string(g);
      track(phase_eq, statmap::phase_equality_residual(p), cell);
      track(commutator, fock::deformed_commutator_residual(p), cell);
      track(conjugate, conjugate_relation_residual(p), cell);
      track(states, state_construction_residual(p), cell);
      CMatrix b_op = fock::b_operator(p);
      track(b_diag, b_op.off_diagonal_norm(), cell);
      track(b_unit, (b_op * b_op.adjoint() - CMatrix::identity(p.dim())).frobenius_norm(), cell);
      track(num_spec, number_spectrum_residual(p), cell);

      for (int dim = 1; dim <= 8; ++dim)
        for (int t = 0; t < cfg.trials; ++t) {
          std::uint64_t cell_seed = cfg.seed ^ (static_cast<std::uint64_t>(g) << 56);
          CMatrix u = qbracket::random_operator(dim, triple_seed(cell_seed, n, dim, t, 0));
          CMatrix v = qbracket::random_operator(dim, triple_seed(cell_seed, n, dim, t, 1));
          CMatrix w = qbracket::random_operator(dim, triple_seed(cell_seed, n, dim, t, 2));
          std::string tcell = cell + " dim=" + std::to_string(dim) + " trial=" + std::to_string(t);
          track(jac_sum, qbracket::jacobi_sum_residual(u, v, w, p), tcell);
          track(jac_diff, qbracket::jacobi_diff_residual(u, v, w, p), tcell);
        }

      for (int si : signs) {
        grassmann::Sign s = si == 0 ? grassmann::Sign::plus : grassmann::Sign::minus;
        std::string scell = cell + (si == 0 ? " sign=+" : " sign=-");
        grassmann::CoherentState st = grassmann::make_coherent_state(s, p);
        track(eigen, grassmann::eigen_residual(st, s, p), scell);
        track(norm_dev, grassmann::inner_product_norm(s, p).deviation_from_one(), scell);
      }

      // Exact label consistency: k_nu alpha == nu - n/2 as rationals, the
      // winding form of eta agrees with the analytic form, and the label
      // round trip is the identity.
      std::vector<Rational> ks = berry::winding_restriction(p);
      for (int nu = 0; nu <= n; ++nu) {
        bool exact = ks[nu] * p.alpha() == Rational(nu) - Rational(n, 2);
        WindingNumber label = statmap::occupation_to_winding(nu, p);
        double diff = std::abs(berry::phase_winding(label, p) -
                               berry::phase_analytic(nu, p));
        int rt = statmap::winding_to_occupation(label, p);
        double residual = std::max(diff, (exact && rt == nu) ? 0.0 : 1.0);
        track(berry_exact, residual, cell + " nu=" + std::to_string(nu));
      }
    }

    // The loop integral is g independent; one sweep per n.
    StatParams p(n, 2);
    for (int nu = 0; nu <= n; ++nu) {
      double err = std::abs(berry::phase_numeric(nu, p, cfg.steps) - berry::phase_analytic(nu, p));
      track(berry_num, err / berry_numeric_bound(n, cfg.steps),
            "n=" + std::to_string(n) + " nu=" + std::to_string(nu));
    }
  }

  rep.passed = true;
  for (Check* c : {&phase_eq, &commutator, &conjugate, &states, &b_diag, &b_unit,
                   &num_spec, &jac_sum, &jac_diff, &eigen, &norm_dev, &berry_exact,
                   &berry_num}) {
    bool ok = c->worst < c->bound;
    rep.passed = rep.passed && ok;
    ordered_json row;
    row["check"] = c->name;
    row["worst"] = c->worst;
    row["bound"] = c->bound;
    row["worst_at"] = c->worst_at;
    row["passed"] = ok;
    rep.rows.push_back(row);
    rep.residuals.emplace_back(c->name, c->worst);
  }
  return rep;
}

}  // namespace isw::cli
