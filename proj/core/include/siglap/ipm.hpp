#ifndef SIGLAP_IPM_HPP
#define SIGLAP_IPM_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "siglap/eigenpair.hpp"
#include "siglap/functional.hpp"
#include "siglap/graph.hpp"

namespace siglap {

struct IpmConfig {
  double outer_tol = 1e-6;     // relative change of lambda that stops
  int max_outer = 200;
  double inner_tol = 1e-8;     // ADMM residual tolerance
  int inner_max_iter = 5000;
  std::uint64_t rng_seed = 0;
  double certificate_tol = 1e-7;  // feasibility tol for the final verify
};

enum class IpmStop { converged, reached_zero, iteration_cap };

// One inverse-power run. lambdas[0] is the quotient at the start vector;
// each later entry records one outer step and the sequence never increases.
struct IpmTrace {
  std::vector<double> lambdas;
  SpectralVector x;
  std::optional<EigenCertificate> certificate;
  IpmStop reason = IpmStop::converged;

  double lambda_star() const { return lambdas.back(); }
  int iterations() const { return static_cast<int>(lambdas.size()) - 1; }
};

// Minimizes iplus(x) - lambda <v, x> over the Euclidean unit ball by ADMM
// (edge soft-thresholding, a factorized least-squares x step, ball
// projection; penalty 1). Returns a point with F at most F(warm / |warm|_2);
// when the iteration ends above that value the scaled warm start itself is
// returned. Preconditions: lambda >= 0, warm != 0.
std::vector<double> inner_solve(const Graph& g, double lambda,
                                std::span<const double> v,
                                std::span<const double> warm,
                                const IpmConfig& cfg = {});

// Inverse power method on the quotient iplus(x) / weighted_norm(x) from
// the given start (any nonzero vector). The quotient sequence is
// non-increasing and every value is an upper bound for the smallest
// eigenvalue; lambda = 0 stops immediately.
IpmTrace ipm_run(const Graph& g, std::span<const double> x0,
                 const IpmConfig& cfg = {});

// ipm_run from `restarts` random starts plus one deterministic start
// seeded by the 2-Laplacian relaxation direction. Deterministic for a
// fixed seed regardless of thread count: run i derives its own generator
// and the best run wins ties by smallest index.
struct MultistartResult {
  IpmTrace best;
  SetPair pair;                       // two-threshold rounding of best.x
  std::vector<double> final_lambdas;  // one per run, index order
  int best_index = 0;
};
MultistartResult ipm_multistart(const Graph& g, int restarts,
                                const IpmConfig& cfg = {}, int threads = 0);

}  // namespace siglap

#endif
