#pragma once

#include "gnnmpc/condensing.hpp"

#include <Eigen/Core>

#include <optional>
#include <string>

namespace gnnmpc {

/// min u'Hu + g'u  s.t.  C u <= d.
struct QpProblem {
  Eigen::MatrixXd hessian;
  Eigen::VectorXd gradient;
  Eigen::MatrixXd constraint_matrix;
  Eigen::VectorXd constraint_bound;

  Eigen::Index variables() const { return gradient.size(); }
  Eigen::Index constraints() const { return constraint_bound.size(); }
  void validate() const;
  double objective(const Eigen::VectorXd& u) const;
};

enum class QpStatus { Optimal, MaxIterations, PrimalInfeasible, NumericalFailure };

std::string to_string(QpStatus status);

struct QpSolution {
  Eigen::VectorXd u;
  Eigen::VectorXd lambda;
  QpStatus status = QpStatus::NumericalFailure;
  int iterations = 0;
  double stationarity = 0.0;          // ||2Hu + g + C'lambda||_inf
  double primal_feasibility = 0.0;    // max(Cu - d, 0)
  double complementarity = 0.0;       // max |lambda_i (Cu - d)_i|
  double objective = 0.0;
};

struct SolverSettings {
  double tolerance = 1e-8;
  int max_iterations = 50;
  double regularization = 1e-9;
  double fraction_to_boundary = 0.995;
  /// Re-solve the KKT system on the detected active set at the end.
  bool polish = true;
  std::optional<Eigen::VectorXd> warm_start;

  void validate() const;
};

/// True when the residuals of (u, lambda) satisfy the optimality certificate:
/// stationarity <= tol (1 + ||g||_inf), feasibility, complementarity and
/// lambda_i >= -tol all within tol.
bool kkt_certified(const QpProblem& p, const QpSolution& s, double tolerance);

/// Fills the residual fields of `s` for its current (u, lambda).
void compute_residuals(const QpProblem& p, QpSolution& s);

/// Mehrotra predictor-corrector interior-point method on the Schur complement
/// in u. Unconstrained problems are solved by one Cholesky factorization.
QpSolution solve_qp(const QpProblem& p, const SolverSettings& s = {});

/// Appends one slack per soft row: z = [u; s], objective + slack_quadratic s's
/// + slack_linear 1's, soft rows become C_r u - s_r <= d_r, plus -s <= 0.
QpProblem to_qp_problem(const CondensedQp& qp);

/// Solves the condensed QP with its slacks. The returned u holds only the
/// inputs; `slacks` (if given) receives the slack values in soft_rows order.
QpSolution solve_condensed(const CondensedQp& qp, const SolverSettings& s = {}, Eigen::VectorXd* slacks = nullptr);

}  // namespace gnnmpc
