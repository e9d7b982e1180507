#ifndef SIGLAP_SRC_BOX_FEASIBILITY_HPP
#define SIGLAP_SRC_BOX_FEASIBILITY_HPP

#include <utility>
#include <vector>

namespace siglap::detail {

// Feasibility of   lo_r <= base_r + sum_k coef_rk z_k <= hi_r  over the box
// z in [-1, 1]^F, decided by minimizing the total squared interval
// violation with exact cyclic coordinate descent. The objective is convex
// and C^1, so coordinate stationarity is global optimality; the problem is
// declared feasible iff the optimum is at most tol^2.
struct BoxFeasibilityProblem {
  int num_vars = 0;
  std::vector<double> lo, hi, base;          // one entry per row
  // entries[k] lists the (row, coefficient) pairs of variable k
  std::vector<std::vector<std::pair<int, double>>> entries;
};

struct BoxFeasibilityResult {
  bool feasible = false;
  double violation_sq = 0.0;
  std::vector<double> z;
  int sweeps = 0;
};

BoxFeasibilityResult solve_box_feasibility(const BoxFeasibilityProblem& p,
                                           double tol, int max_sweeps = 20000);

}  // namespace siglap::detail

#endif
