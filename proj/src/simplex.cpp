#include "boxpack/simplex.hpp"

#include <algorithm>
#include <cmath>

namespace boxpack {

namespace {

constexpr int kRefactorInterval = 256;
constexpr int kStallLimit = 64;

bool finite(double v) { return std::isfinite(v); }

}  // namespace

SimplexSolver::SimplexSolver(const MilpModel& model, SimplexOptions options)
    : model_(&model), opts_(options) {
  n_ = static_cast<int>(model.vars.size());
  m_ = static_cast<int>(model.rows.size());
  int total = n_ + m_;
  lb_.assign(static_cast<std::size_t>(total), 0.0);
  ub_.assign(static_cast<std::size_t>(total), 0.0);
  cost_.assign(static_cast<std::size_t>(total), 0.0);
  rhs_.assign(static_cast<std::size_t>(m_), 0.0);
  cols_.resize(static_cast<std::size_t>(n_));
  for (int j = 0; j < n_; ++j) {
    const Variable& v = model.vars[static_cast<std::size_t>(j)];
    lb_[static_cast<std::size_t>(j)] = v.lb;
    ub_[static_cast<std::size_t>(j)] = v.ub;
    cost_[static_cast<std::size_t>(j)] = v.obj;
  }
  for (int i = 0; i < m_; ++i) {
    const Row& r = model.rows[static_cast<std::size_t>(i)];
    rhs_[static_cast<std::size_t>(i)] = r.rhs;
    for (const auto& [var, coef] : r.coeffs)
      cols_[static_cast<std::size_t>(var)].emplace_back(i, coef);
    int logical = n_ + i;
    switch (r.sense) {
      case 'L':
        lb_[static_cast<std::size_t>(logical)] = 0.0;
        ub_[static_cast<std::size_t>(logical)] = kInf;
        break;
      case 'G':
        lb_[static_cast<std::size_t>(logical)] = -kInf;
        ub_[static_cast<std::size_t>(logical)] = 0.0;
        break;
      case 'E':
        lb_[static_cast<std::size_t>(logical)] = 0.0;
        ub_[static_cast<std::size_t>(logical)] = 0.0;
        break;
      default:
        throw Error("unknown row sense");
    }
  }
  model_lb_ = lb_;
  model_ub_ = ub_;
}

void SimplexSolver::set_var_bounds(int var, double lb, double ub) {
  lb_[static_cast<std::size_t>(var)] = lb;
  ub_[static_cast<std::size_t>(var)] = ub;
}

void SimplexSolver::reset_var_bounds() {
  lb_ = model_lb_;
  ub_ = model_ub_;
}

void SimplexSolver::load_basis(const std::vector<VarStatus>* warm_basis) {
  int total = n_ + m_;
  vstat_.assign(static_cast<std::size_t>(total), VarStatus::AtLower);
  basis_.clear();
  bool warm_ok = false;
  if (warm_basis != nullptr && static_cast<int>(warm_basis->size()) == total) {
    int basic = 0;
    for (VarStatus s : *warm_basis)
      if (s == VarStatus::Basic) ++basic;
    if (basic == m_) {
      vstat_ = *warm_basis;
      warm_ok = true;
    }
  }
  if (!warm_ok) {
    for (int i = 0; i < m_; ++i) vstat_[static_cast<std::size_t>(n_ + i)] = VarStatus::Basic;
  }
  slot_of_.assign(static_cast<std::size_t>(total), -1);
  basis_.reserve(static_cast<std::size_t>(m_));
  for (int j = 0; j < total; ++j)
    if (vstat_[static_cast<std::size_t>(j)] == VarStatus::Basic) {
      slot_of_[static_cast<std::size_t>(j)] = static_cast<int>(basis_.size());
      basis_.push_back(j);
    }

  // Nonbasic variables sit on a finite bound nearest their status.
  xval_.assign(static_cast<std::size_t>(total), 0.0);
  for (int j = 0; j < total; ++j) {
    std::size_t sj = static_cast<std::size_t>(j);
    if (vstat_[sj] == VarStatus::Basic) continue;
    double lo = lb_[sj], hi = ub_[sj];
    if (vstat_[sj] == VarStatus::AtUpper && finite(hi))
      xval_[sj] = hi;
    else if (finite(lo))
      xval_[sj] = lo;
    else if (finite(hi))
      xval_[sj] = hi;
    else
      xval_[sj] = 0.0;
    vstat_[sj] = (finite(lo) && xval_[sj] == lo) ? VarStatus::AtLower : VarStatus::AtUpper;
  }
}

void SimplexSolver::refactor() {
  Eigen::MatrixXd basemat = Eigen::MatrixXd::Zero(m_, m_);
  for (int s = 0; s < m_; ++s) {
    int var = basis_[static_cast<std::size_t>(s)];
    if (var >= n_) {
      basemat(var - n_, s) = 1.0;
    } else {
      for (const auto& [row, coef] : cols_[static_cast<std::size_t>(var)]) basemat(row, s) = coef;
    }
  }
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(basemat);
  double mindiag = m_ > 0 ? lu.matrixLU().diagonal().cwiseAbs().minCoeff() : 1.0;
  bool singular = m_ > 0 && mindiag < 1e-11;
  if (!singular) {
    binv_ = lu.solve(Eigen::MatrixXd::Identity(m_, m_));
    singular = !binv_.allFinite();
  }
  if (singular) {
    // Degenerate warm basis: fall back to the all-logical basis.
    for (int j = 0; j < n_ + m_; ++j)
      if (vstat_[static_cast<std::size_t>(j)] == VarStatus::Basic) {
        std::size_t sj = static_cast<std::size_t>(j);
        double lo = lb_[sj];
        vstat_[sj] = finite(lo) ? VarStatus::AtLower : VarStatus::AtUpper;
        xval_[sj] = finite(lo) ? lo : (finite(ub_[sj]) ? ub_[sj] : 0.0);
      }
    basis_.clear();
    slot_of_.assign(static_cast<std::size_t>(n_ + m_), -1);
    for (int i = 0; i < m_; ++i) {
      vstat_[static_cast<std::size_t>(n_ + i)] = VarStatus::Basic;
      slot_of_[static_cast<std::size_t>(n_ + i)] = i;
      basis_.push_back(n_ + i);
    }
    binv_ = Eigen::MatrixXd::Identity(m_, m_);
  }
}

void SimplexSolver::compute_basics() {
  Eigen::VectorXd resid(m_);
  for (int i = 0; i < m_; ++i) resid(i) = rhs_[static_cast<std::size_t>(i)];
  for (int j = 0; j < n_ + m_; ++j) {
    std::size_t sj = static_cast<std::size_t>(j);
    if (vstat_[sj] == VarStatus::Basic || xval_[sj] == 0.0) continue;
    if (j >= n_) {
      resid(j - n_) -= xval_[sj];
    } else {
      for (const auto& [row, coef] : cols_[sj]) resid(row) -= coef * xval_[sj];
    }
  }
  Eigen::VectorXd xb = binv_ * resid;
  for (int s = 0; s < m_; ++s) xval_[static_cast<std::size_t>(basis_[static_cast<std::size_t>(s)])] = xb(s);
}

double SimplexSolver::infeasibility() const {
  double z = 0.0;
  for (int s = 0; s < m_; ++s) {
    std::size_t v = static_cast<std::size_t>(basis_[static_cast<std::size_t>(s)]);
    if (xval_[v] < lb_[v]) z += lb_[v] - xval_[v];
    if (xval_[v] > ub_[v]) z += xval_[v] - ub_[v];
  }
  return z;
}

Eigen::VectorXd SimplexSolver::ftran(int var) const {
  Eigen::VectorXd w = Eigen::VectorXd::Zero(m_);
  if (var >= n_) {
    w = binv_.col(var - n_);
  } else {
    for (const auto& [row, coef] : cols_[static_cast<std::size_t>(var)]) w += coef * binv_.col(row);
  }
  return w;
}

double SimplexSolver::column_dot(const Eigen::VectorXd& y, int var) const {
  if (var >= n_) return y(var - n_);
  double acc = 0.0;
  for (const auto& [row, coef] : cols_[static_cast<std::size_t>(var)]) acc += coef * y(row);
  return acc;
}

int SimplexSolver::price(Phase phase, const Eigen::VectorXd& y, bool bland, int* direction) const {
  int best = -1;
  double best_score = 0.0;
  for (int j = 0; j < n_ + m_; ++j) {
    std::size_t sj = static_cast<std::size_t>(j);
    if (vstat_[sj] == VarStatus::Basic) continue;
    if (ub_[sj] - lb_[sj] <= opts_.pivot_tol) continue;  // fixed
    double d = (phase == Phase::Objective ? cost_[sj] : 0.0) - column_dot(y, j);
    double score = 0.0;
    int dir = 0;
    if (vstat_[sj] == VarStatus::AtLower && d > opts_.feas_tol) {
      score = d;
      dir = 1;
    } else if (vstat_[sj] == VarStatus::AtUpper && d < -opts_.feas_tol) {
      score = -d;
      dir = -1;
    } else {
      continue;
    }
    if (bland) {
      *direction = dir;
      return j;
    }
    if (score > best_score) {
      best_score = score;
      best = j;
      *direction = dir;
    }
  }
  return best;
}

LpSolution SimplexSolver::solve(const std::vector<VarStatus>* warm_basis) {
  LpSolution sol;
  for (int j = 0; j < n_ + m_; ++j)
    if (lb_[static_cast<std::size_t>(j)] > ub_[static_cast<std::size_t>(j)] + opts_.pivot_tol) {
      sol.status = LpStatus::Infeasible;
      return sol;
    }

  load_basis(warm_basis);
  refactor();
  compute_basics();

  std::int64_t iters = 0;
  int since_refactor = 0;
  int stall = 0;
  bool bland = false;
  double last_measure = -kInf;
  Phase last_phase = Phase::Feasibility;

  Eigen::VectorXd y(m_);
  Eigen::VectorXd gamma(m_);

  while (true) {
    if (iters >= opts_.max_iterations) {
      sol.status = LpStatus::IterationLimit;
      break;
    }

    double infeas = infeasibility();
    Phase phase = infeas > opts_.feas_tol ? Phase::Feasibility : Phase::Objective;

    // Reduced costs come from the phase objective: the composite
    // infeasibility sum in phase 1, the model objective in phase 2.
    if (phase == Phase::Feasibility) {
      for (int s = 0; s < m_; ++s) {
        std::size_t v = static_cast<std::size_t>(basis_[static_cast<std::size_t>(s)]);
        double g = 0.0;
        if (xval_[v] < lb_[v] - opts_.pivot_tol)
          g = -1.0;
        else if (xval_[v] > ub_[v] + opts_.pivot_tol)
          g = 1.0;
        gamma(s) = g;
      }
      y.noalias() = binv_.transpose() * gamma;
      // Entering tests below expect "phase objective improves"; for the
      // feasibility phase the improving sign is inverted, so flip y and use
      // the shared maximizing test with zero costs.
      y = -y;
    } else {
      for (int s = 0; s < m_; ++s) gamma(s) = cost_[static_cast<std::size_t>(basis_[static_cast<std::size_t>(s)])];
      y.noalias() = binv_.transpose() * gamma;
    }

    double measure = phase == Phase::Feasibility ? -infeas : [&] {
      double obj = 0.0;
      for (int j = 0; j < n_; ++j) obj += cost_[static_cast<std::size_t>(j)] * xval_[static_cast<std::size_t>(j)];
      return obj;
    }();
    if (measure > last_measure + 1e-12) {
      last_measure = measure;
      stall = 0;
      bland = false;
    } else if (++stall > kStallLimit) {
      bland = true;
    }

    int dir = 0;
    int entering = price(phase, y, bland, &dir);
    if (entering < 0) {
      if (phase == Phase::Feasibility) {
        sol.status = LpStatus::Infeasible;
      } else {
        sol.status = LpStatus::Optimal;
      }
      break;
    }

    Eigen::VectorXd w = ftran(entering);
    std::size_t se = static_cast<std::size_t>(entering);

    // Ratio test: step length until a basic variable reaches a breakpoint or
    // the entering variable flips to its opposite bound.
    double theta = kInf;
    int leave_slot = -1;
    double leave_bound = 0.0;
    for (int s = 0; s < m_; ++s) {
      std::size_t v = static_cast<std::size_t>(basis_[static_cast<std::size_t>(s)]);
      double rate = dir * w(s);  // x_basic decreases at this rate
      if (std::abs(rate) <= opts_.pivot_tol) continue;
      double cand = kInf;
      double bound = 0.0;
      if (rate > 0) {
        // Moving down: an above-upper basic stops at its upper bound, a
        // feasible one at its lower bound, a below-lower one has no
        // breakpoint in this direction.
        double target;
        if (xval_[v] > ub_[v] + opts_.pivot_tol)
          target = ub_[v];
        else if (xval_[v] >= lb_[v] - opts_.pivot_tol)
          target = lb_[v];
        else
          continue;
        if (!finite(target)) continue;
        cand = (xval_[v] - target) / rate;
        bound = target;
      } else {
        double target;
        if (xval_[v] < lb_[v] - opts_.pivot_tol)
          target = lb_[v];
        else if (xval_[v] <= ub_[v] + opts_.pivot_tol)
          target = ub_[v];
        else
          continue;
        if (!finite(target)) continue;
        cand = (target - xval_[v]) / (-rate);
        bound = target;
      }
      if (cand < 0) cand = 0;
      bool better = cand < theta - 1e-10;
      bool tie = std::abs(cand - theta) <= 1e-10;
      if (better ||
          (tie && leave_slot >= 0 &&
           (bland ? basis_[static_cast<std::size_t>(s)] < basis_[static_cast<std::size_t>(leave_slot)]
                  : std::abs(w(s)) > std::abs(w(leave_slot))))) {
        theta = cand;
        leave_slot = s;
        leave_bound = bound;
      }
    }
    double flip_range = ub_[se] - lb_[se];
    bool flip = false;
    if (finite(flip_range) && flip_range < theta) {
      theta = flip_range;
      flip = true;
    }
    if (!finite(theta)) {
      sol.status = phase == Phase::Feasibility ? LpStatus::IterationLimit : LpStatus::Unbounded;
      break;
    }

    // Apply the step.
    if (theta != 0.0) {
      for (int s = 0; s < m_; ++s) {
        std::size_t v = static_cast<std::size_t>(basis_[static_cast<std::size_t>(s)]);
        xval_[v] -= dir * theta * w(s);
      }
      xval_[se] += dir * theta;
    }
    ++iters;

    if (flip) {
      vstat_[se] = vstat_[se] == VarStatus::AtLower ? VarStatus::AtUpper : VarStatus::AtLower;
      continue;
    }

    // Pivot: entering replaces the leaving basic variable.
    std::size_t lv = static_cast<std::size_t>(basis_[static_cast<std::size_t>(leave_slot)]);
    xval_[lv] = leave_bound;
    vstat_[lv] = (leave_bound == lb_[lv]) ? VarStatus::AtLower : VarStatus::AtUpper;
    slot_of_[lv] = -1;
    vstat_[se] = VarStatus::Basic;
    slot_of_[se] = leave_slot;
    basis_[static_cast<std::size_t>(leave_slot)] = entering;

    double piv = w(leave_slot);
    Eigen::RowVectorXd pivrow = binv_.row(leave_slot) / piv;
    Eigen::VectorXd factor = w;
    factor(leave_slot) = 0.0;
    binv_.noalias() -= factor * pivrow;
    binv_.row(leave_slot) = pivrow;

    if (++since_refactor >= kRefactorInterval) {
      refactor();
      compute_basics();
      since_refactor = 0;
    }
  }

  sol.iterations = iters;
  sol.x.assign(static_cast<std::size_t>(n_), 0.0);
  double obj = 0.0;
  for (int j = 0; j < n_; ++j) {
    double v = xval_[static_cast<std::size_t>(j)];
    sol.x[static_cast<std::size_t>(j)] = v;
    obj += cost_[static_cast<std::size_t>(j)] * v;
  }
  sol.objective = obj;
  sol.basis = vstat_;
  return sol;
}

LpSolution lp_solve(const MilpModel& model, bool relax, const SimplexOptions& options) {
  if (!relax) {
    for (const Variable& v : model.vars)
      if (v.integer) throw Error("model has integer variables; solve with relax=true");
  }
  SimplexSolver solver(model, options);
  return solver.solve();
}

}  // namespace boxpack
