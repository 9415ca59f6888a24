#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "boxpack/core.hpp"

namespace boxpack {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct Variable {
  double lb = 0.0;
  double ub = kInf;
  bool integer = false;
  double obj = 0.0;
  std::string name;
};

struct Row {
  std::vector<std::pair<int, double>> coeffs;  // sorted by variable id, no duplicates
  char sense = 'L';                            // 'L' <=, 'E' =, 'G' >=
  double rhs = 0.0;
  std::string name;
};

/// Sparse mixed-integer linear program. The objective sense is always
/// maximize.
struct MilpModel {
  std::string name = "BOXPACK";
  std::vector<Variable> vars;
  std::vector<Row> rows;

  int add_var(std::string name, double lb, double ub, bool integer, double obj);
  int add_binary(std::string name, double obj) { return add_var(std::move(name), 0.0, 1.0, true, obj); }
  int add_row(std::string name, std::vector<std::pair<int, double>> coeffs, char sense, double rhs);
};

/// Reported model statistics; the objective counts as a row and its nonzero
/// coefficients count as nonzeros.
struct ModelStats {
  std::int64_t rows = 0;
  std::int64_t cols = 0;
  std::int64_t nonzeros = 0;
};

ModelStats count_stats(const MilpModel& model);

enum class LpStatus { Optimal, Infeasible, Unbounded, IterationLimit };

enum class VarStatus : unsigned char { AtLower, AtUpper, Basic };

struct LpSolution {
  LpStatus status = LpStatus::IterationLimit;
  double objective = 0.0;
  std::vector<double> x;               // structural variable values
  std::vector<VarStatus> basis;        // statuses for structurals then row logicals
  std::int64_t iterations = 0;
};

struct SimplexOptions {
  std::int64_t max_iterations = 2'000'000;
  double feas_tol = 1e-7;
  double pivot_tol = 1e-9;
};

/// Two-phase primal simplex on the model; `relax` drops integrality. Passing
/// relax=false requires a model without integer variables.
LpSolution lp_solve(const MilpModel& model, bool relax, const SimplexOptions& options = {});

enum class BnbStatus { Optimal, TimeLimit, NodeLimit, Infeasible };

struct BnbConfig {
  double time_limit_s = std::numeric_limits<double>::max();
  std::int64_t node_limit = std::numeric_limits<std::int64_t>::max();
  double int_tol = 1e-6;
  SimplexOptions lp;
};

struct BnbResult {
  BnbStatus status = BnbStatus::NodeLimit;
  bool has_incumbent = false;
  std::vector<double> incumbent;
  double incumbent_value = 0.0;
  double bound = 0.0;
  std::int64_t nodes = 0;
  double wall_seconds = 0.0;

  // 100 * (1 - s/b) for incumbent value s and bound b.
  double gap_percent() const;
  bool proven_optimal() const;
};

BnbResult branch_and_bound(const MilpModel& model, const BnbConfig& config = {});

// ---- model file formats -------------------------------------------------

/// Fixed-layout MPS text; deterministic byte-for-byte for a given model.
std::string emit_mps(const MilpModel& model);

/// LP text format (Maximize / Subject To / Bounds / Binaries / Generals).
std::string emit_lp(const MilpModel& model);

/// Inverse of emit_mps up to name-preserving identity.
MilpModel parse_mps(const std::string& text);

// ---- exact certificate --------------------------------------------------

/// Re-solves the final basis of an LP solution in exact rational arithmetic
/// and checks primal feasibility and the objective value.
struct ExactCheckResult {
  bool basis_ok = false;       // basis system solvable and statuses consistent
  bool primal_feasible = false;
  std::string objective;       // exact rational, "n" or "n/d"
  double objective_value = 0.0;
};

ExactCheckResult exact_recheck(const MilpModel& model, const LpSolution& solution);

}  // namespace boxpack
