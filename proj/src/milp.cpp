#include "boxpack/milp.hpp"

#include <algorithm>

namespace boxpack {

int MilpModel::add_var(std::string vname, double lb, double ub, bool integer, double obj) {
  Variable v;
  v.name = std::move(vname);
  v.lb = lb;
  v.ub = ub;
  v.integer = integer;
  v.obj = obj;
  if (integer && !(lb > -kInf && ub < kInf)) throw Error("integer variables need finite bounds");
  vars.push_back(std::move(v));
  return static_cast<int>(vars.size()) - 1;
}

int MilpModel::add_row(std::string rname, std::vector<std::pair<int, double>> coeffs, char sense,
                       double rhs) {
  Row r;
  r.name = std::move(rname);
  r.sense = sense;
  r.rhs = rhs;
  std::sort(coeffs.begin(), coeffs.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 0; i + 1 < coeffs.size(); ++i)
    if (coeffs[i].first == coeffs[i + 1].first) throw Error("duplicate variable in row " + r.name);
  for (const auto& [var, coef] : coeffs) {
    if (var < 0 || var >= static_cast<int>(vars.size())) throw Error("row references unknown variable");
    (void)coef;
  }
  r.coeffs = std::move(coeffs);
  rows.push_back(std::move(r));
  return static_cast<int>(rows.size()) - 1;
}

ModelStats count_stats(const MilpModel& model) {
  ModelStats s;
  s.cols = static_cast<std::int64_t>(model.vars.size());
  s.rows = static_cast<std::int64_t>(model.rows.size()) + 1;  // objective counted as a row
  for (const Variable& v : model.vars)
    if (v.obj != 0.0) ++s.nonzeros;
  for (const Row& r : model.rows) s.nonzeros += static_cast<std::int64_t>(r.coeffs.size());
  return s;
}

double BnbResult::gap_percent() const {
  double s = has_incumbent ? incumbent_value : 0.0;
  if (bound <= 0.0) return s >= bound ? 0.0 : 100.0;
  if (s <= 0.0) return 100.0;
  if (s >= bound) return 0.0;
  return 100.0 * (1.0 - s / bound);
}

bool BnbResult::proven_optimal() const { return status == BnbStatus::Optimal && has_incumbent; }

}  // namespace boxpack
