#ifndef SIGLAP_EIGENPAIR_HPP
#define SIGLAP_EIGENPAIR_HPP

#include <optional>
#include <span>
#include <vector>

#include "siglap/functional.hpp"
#include "siglap/graph.hpp"

namespace siglap {

// Witness that (mu, x) solves the eigenvalue system of the signless
// 1-Laplacian: z_e in sgn(x_i + x_j) per edge, and at every vertex
// sum_j w_ij z_ij = mu d_i sgn(x_i) (an interval condition where x_i = 0).
// x is normalized to weighted norm 1 and mu = iplus(x).
struct EigenCertificate {
  double mu = 0.0;
  SpectralVector x;
  std::vector<double> z;  // one entry per edge, aligned with g.edges()
  double tol = 0.0;       // feasibility tolerance the witness satisfies
};

// Attempts to certify x (any nonzero vector; normalized internally) as an
// eigenvector. Edge sums and coordinates within sign_scale * max|x_i| of
// zero are treated as zero, which frees the corresponding z entries or
// relaxes the vertex condition to an interval. The remaining small box
// feasibility problem is solved by exact coordinate descent; feasible iff
// the residual optimum is at most tol^2. Returns the certificate, or
// nullopt when no witness exists at this tolerance.
std::optional<EigenCertificate> verify_eigenpair(const Graph& g,
                                                 std::span<const double> x,
                                                 double tol = 1e-9,
                                                 double sign_scale = 1e-12);

struct TernaryEigenpair {
  double mu;
  SetPair pair;
};

// Verifies the ternary vector of every labeled set pair (3^n - 1 of them)
// and returns the distinct eigenvalues found, sorted ascending, each with
// its first witness in enumeration order. Values closer than 1e-9 are
// merged. Throws CapacityError when n exceeds n_max.
std::vector<TernaryEigenpair> enumerate_ternary_eigenpairs(const Graph& g,
                                                           int n_max = 12);

// Checks that consecutive gaps of a sorted list of distinct eigenvalues
// respect the lower bound 2 / (n^2 (n-1)^2), with 1e-9 slack.
bool spectral_gap_check(std::span<const double> sorted_mus, int n);

// Connected components of the support {i : |x_i| > 1e-12 * max|x_j|},
// each sorted, ordered by smallest member.
struct NodalDecomposition {
  std::vector<std::vector<int>> domains;
  int count = 0;
};
NodalDecomposition nodal_domains(const Graph& g, std::span<const double> x);

// For a certified eigenpair and one of its nodal domains D: the restriction
// (x on D, rescaled to weighted norm 1) and the flattening (sgn(x_i)/vol(D)
// on D). Both are eigenvectors again: the restriction keeps eigenvalue mu,
// the flattening attains its own iplus value.
struct DomainRestriction {
  SpectralVector restricted;
  SpectralVector flattened;
};
DomainRestriction restrict_to_domain(const Graph& g,
                                     const EigenCertificate& cert,
                                     int domain_index);

// True iff y lies in the closure of the refined sign simplex of cert.x:
// coordinatewise and for every edge sum, y's sign equals x's or y's value
// is zero (zeros absorb any sign). When true, y is an eigenvector with the
// same eigenvalue.
bool simplex_closure_check(const Graph& g, const EigenCertificate& cert,
                           std::span<const double> y);

}  // namespace siglap

#endif
