#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "boxpack/milp.hpp"

namespace boxpack {

/// Bounded-variable two-phase primal simplex over a loaded model. The solver
/// keeps the model immutable and owns a mutable copy of the variable bounds,
/// so branch-and-bound can tighten bounds between warm-started solves.
///
/// Internally every row gets a logical variable with unit coefficient; row
/// senses become logical bounds (<= : [0,inf), >= : (-inf,0], = : [0,0]).
/// The basis inverse is kept dense and refactorised periodically.
class SimplexSolver {
 public:
  explicit SimplexSolver(const MilpModel& model, SimplexOptions options = {});

  void set_var_bounds(int var, double lb, double ub);
  void reset_var_bounds();

  int num_structural() const { return n_; }
  int num_rows() const { return m_; }

  /// Solves from scratch or from a previous basis (structural + logical
  /// statuses, as returned in LpSolution::basis).
  LpSolution solve(const std::vector<VarStatus>* warm_basis = nullptr);

 private:
  enum class Phase { Feasibility, Objective };

  void load_basis(const std::vector<VarStatus>* warm_basis);
  void refactor();
  void compute_basics();
  double infeasibility() const;
  Eigen::VectorXd ftran(int var) const;   // binv * column(var)
  double column_dot(const Eigen::VectorXd& y, int var) const;
  int price(Phase phase, const Eigen::VectorXd& y, bool bland, int* direction) const;

  const MilpModel* model_;
  SimplexOptions opts_;
  int n_ = 0;  // structural count
  int m_ = 0;  // row count
  std::vector<double> lb_, ub_;        // structurals then logicals
  std::vector<double> model_lb_, model_ub_;
  std::vector<double> cost_;           // maximize
  std::vector<double> rhs_;
  std::vector<std::vector<std::pair<int, double>>> cols_;  // structural columns
  std::vector<VarStatus> vstat_;
  std::vector<int> basis_;             // variable basic in each row slot
  std::vector<int> slot_of_;           // var -> row slot or -1
  std::vector<double> xval_;
  Eigen::MatrixXd binv_;
};

}  // namespace boxpack
