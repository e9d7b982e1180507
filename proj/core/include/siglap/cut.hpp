#ifndef SIGLAP_CUT_HPP
#define SIGLAP_CUT_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "siglap/graph.hpp"
#include "siglap/ipm.hpp"

namespace siglap {

// Edge-weight tallies of a candidate pair (A, B):
//   crossing  C = weight of edges between A and B,
//   incident  M = weight of edges touching A u B at all,
//   frontier  X = weight of edges with exactly one endpoint in A u B.
struct CutScore {
  double crossing = 0.0;
  double incident = 0.0;
  double frontier = 0.0;

  double objective1() const { return crossing / incident; }
  double objective2() const { return (crossing + frontier / 2) / incident; }
};

enum class CutObjective : int { ratio = 1, ratio_with_frontier = 2 };

// Sweeps thresholds t over the distinct nonzero |x_i| and scores the pair
// A = {x_i >= t}, B = {x_i <= -t}; returns the maximizer of the chosen
// objective (ties: smaller t). Throws DomainError on the zero vector.
std::pair<SetPair, CutScore> two_threshold_round(const Graph& g,
                                                 std::span<const double> x,
                                                 CutObjective objective);

// Same threshold family, but minimizes the dual Cheeger objective
// 1 - 2 cut / vol. The returned pair always satisfies
//   dual_cheeger_objective(pair) <= iplus(x) / weighted_norm(x) + 1e-12,
// a guaranteed postcondition (ContractViolation if it ever failed).
SetPair coarea_certified_round(const Graph& g, std::span<const double> x);

// Power iteration for the top eigenpair of the degree-normalized graph
// Laplacian, started from all-ones with a +1e-3 perturbation at vertex 0.
// direction is the eigenvector pulled back through D^{-1/2} (so it is a
// signed bipartition indicator when the graph is bipartite). Throws
// ConvergenceError if the residual never reaches tol.
struct D2Relaxation {
  std::vector<double> direction;
  double eigenvalue = 0.0;
  int iterations = 0;
};
D2Relaxation d2_relaxation_vector(const Graph& g, double tol = 1e-8,
                                  int max_iter = 100000);

enum class CutProvenance { d1_rsc, d2_rsc, greedy, oracle };

struct CutResult {
  std::vector<int> side_s;
  std::vector<int> side_t;
  double cut_weight = 0.0;
  double cut_fraction = 0.0;  // of the total edge weight
  CutProvenance provenance = CutProvenance::greedy;
  std::optional<CutObjective> objective;
};

// Places vertices in the given order, each on the side that cuts the most
// weight to already-placed neighbors (ties toward side_s). Guarantees
// cut_fraction >= 1/2. `order` must be a permutation of all vertices.
CutResult greedy_cut(const Graph& g, std::span<const int> order);

enum class RscSolver { d1, d2 };

struct RscConfig {
  IpmConfig ipm;               // rng_seed also seeds greedy shuffling
  int restarts = 20;           // random IPM starts per recursion level
  int threads = 0;             // 0 = hardware concurrency
  double d2_tol = 1e-8;
  int d2_max_iter = 100000;
  bool greedy_random_order = false;
};

// Recursive spectral cut: compute a spectral vector (inverse power method
// for d1, the 2-Laplacian relaxation for d2), round it with
// two_threshold_round, and either keep the pair as opposite cut sides and
// recurse on the untouched remainder, or (when the rounded pair's
// objective2 is at most 1/2) finish the remainder with greedy_cut. The
// recursive half is merged in whichever of its two orientations cuts more.
CutResult rsc_maxcut(const Graph& g, RscSolver solver, CutObjective objective,
                     const RscConfig& cfg = {});

// Guaranteed cut fraction when the maxcut optimum is 1 - eps:
// 1 - eps + eps ln(2 eps) on [0, 1/2], with value 1 at eps = 0.
double rsc_cost_bound(double epsilon);

// min over eps in [0, 1/2] of rsc_cost_bound(eps) / (1 - eps); about 0.768.
double approximation_ratio_floor();

}  // namespace siglap

#endif
