#include "box_feasibility.hpp"

#include <algorithm>
#include <cmath>

namespace siglap::detail {

namespace {

// Signed distance of y to [lo, hi]: 0 inside, y - hi above, y - lo below.
inline double overshoot(double y, double lo, double hi) {
  if (y > hi) return y - hi;
  if (y < lo) return y - lo;
  return 0.0;
}

}  // namespace

BoxFeasibilityResult solve_box_feasibility(const BoxFeasibilityProblem& p,
                                           double tol, int max_sweeps) {
  const size_t rows = p.base.size();
  std::vector<double> row_sum(p.base);
  std::vector<double> z(static_cast<size_t>(p.num_vars), 0.0);

  auto total_violation = [&]() {
    double g = 0.0;
    for (size_t r = 0; r < rows; ++r) {
      double d = overshoot(row_sum[r], p.lo[r], p.hi[r]);
      g += d * d;
    }
    return g;
  };

  const double target = tol * tol;
  BoxFeasibilityResult result;
  result.violation_sq = total_violation();

  int sweep = 0;
  while (result.violation_sq > 0.25 * target && sweep < max_sweeps &&
         p.num_vars > 0) {
    ++sweep;
    double max_move = 0.0;
    for (int k = 0; k < p.num_vars; ++k) {
      const auto& rows_k = p.entries[static_cast<size_t>(k)];
      if (rows_k.empty()) continue;
      double zk = z[static_cast<size_t>(k)];

      // Objective restricted to this coordinate: sum of squared interval
      // overshoots of partial_r + c_r t, a convex piecewise quadratic.
      // Its derivative is nondecreasing piecewise linear; locate the root
      // among the breakpoints where a row enters or leaves its interval.
      auto derivative = [&](double t) {
        double d = 0.0;
        for (const auto& [r, c] : rows_k) {
          double partial = row_sum[static_cast<size_t>(r)] - c * zk;
          d += 2.0 * c *
               overshoot(partial + c * t, p.lo[static_cast<size_t>(r)],
                         p.hi[static_cast<size_t>(r)]);
        }
        return d;
      };

      double best;
      if (derivative(-1.0) >= 0.0) {
        best = -1.0;
      } else if (derivative(1.0) <= 0.0) {
        best = 1.0;
      } else {
        double breaks[16];
        size_t nb = 0;
        for (const auto& [r, c] : rows_k) {
          double partial = row_sum[static_cast<size_t>(r)] - c * zk;
          for (double bound : {p.lo[static_cast<size_t>(r)],
                               p.hi[static_cast<size_t>(r)]}) {
            double t = (bound - partial) / c;
            if (t > -1.0 && t < 1.0 && nb < 16) breaks[nb++] = t;
          }
        }
        std::sort(breaks, breaks + nb);
        double a = -1.0, da = derivative(-1.0);
        best = 1.0;
        for (size_t i = 0; i <= nb; ++i) {
          double b = (i < nb) ? breaks[i] : 1.0;
          double db = derivative(b);
          if (db >= 0.0) {
            // Root in [a, b]; the derivative is linear on this segment.
            best = (db > da) ? a + (b - a) * (-da) / (db - da) : a;
            break;
          }
          a = b;
          da = db;
        }
      }

      double delta = best - zk;
      if (delta != 0.0) {
        z[static_cast<size_t>(k)] = best;
        for (const auto& [r, c] : rows_k)
          row_sum[static_cast<size_t>(r)] += c * delta;
        max_move = std::max(max_move, std::abs(delta));
      }
    }
    result.violation_sq = total_violation();
    if (max_move < 1e-15) break;
  }

  result.feasible = result.violation_sq <= target;
  result.z = std::move(z);
  result.sweeps = sweep;
  return result;
}

}  // namespace siglap::detail
