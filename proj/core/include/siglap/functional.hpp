#ifndef SIGLAP_FUNCTIONAL_HPP
#define SIGLAP_FUNCTIONAL_HPP

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "siglap/graph.hpp"

namespace siglap {

// I+(x) = sum over edges of w_ij |x_i + x_j|. Zero exactly on vectors
// whose sign pattern is a bipartition of the support with no in-part edges.
double iplus(const Graph& g, std::span<const double> x);

// I-(x) = sum over edges of w_ij |x_i - x_j| (the total variation twin).
double iminus(const Graph& g, std::span<const double> x);

// Degree-weighted l1 norm: sum of d_i |x_i|.
double weighted_norm(const Graph& g, std::span<const double> x);

// x scaled to weighted_norm 1. Throws DomainError on the zero vector.
std::vector<double> normalized(const Graph& g, std::span<const double> x);

// Canonical subgradient of the weighted norm: v_i = d_i sgn(x_i), with
// v_i = 0 where x_i = 0.
std::vector<double> norm_subgradient(const Graph& g, std::span<const double> x);

// A vector together with its cached evaluations.
struct SpectralVector {
  std::vector<double> values;
  double weighted_norm = 0.0;
  double iplus = 0.0;
};
SpectralVector make_spectral_vector(const Graph& g, std::vector<double> values);

// The two-sided indicator of a set pair: +value on a, -value on b, zero
// elsewhere, with value = 1 / vol(a u b) so the weighted norm is 1.
struct TernaryVector {
  SetPair pair;
  double value;
};
TernaryVector make_ternary(const Graph& g, SetPair pair);
std::vector<double> ternary_values(const Graph& g, const TernaryVector& t);

// 1 - 2 cut(a, b) / vol(a u b); equals iplus of the ternary vector of the
// pair. Smaller is better; the best pair attains 1 - h+.
double dual_cheeger_objective(const Graph& g, const SetPair& pair);

// A real function of set pairs, used by the Lovasz extension below.
struct SetPairFunction {
  std::string name;
  std::function<double(const SetPair&)> eval;
};

// Piecewise-linear extension of f to vectors: integral over t > 0 of
// f({x_i > t}, {-x_i > t}) dt, evaluated exactly by sorting |x_i|.
// Throws DomainError on the zero vector.
double lovasz_extension(const Graph& g, const SetPairFunction& f,
                        std::span<const double> x);

// The three set-pair functions with closed-form extensions:
//   pair_volume:    vol(A) + vol(B)            -> weighted_norm(x)
//   pair_crossing:  2 |E(A, B)|                -> weighted_norm(x) - iplus(x)
//   pair_defect:    vol(A) + vol(B) - 2|E(A,B)| -> iplus(x)
SetPairFunction pair_volume_function(const Graph& g);
SetPairFunction pair_crossing_function(const Graph& g);
SetPairFunction pair_defect_function(const Graph& g);

// True iff p lies in the subdifferential of iplus at x, i.e. there is a
// symmetric edge assignment z_ij in sgn(x_i + x_j) with
// sum_j w_ij z_ij = p_i at every vertex, within tol.
bool iplus_subdifferential_contains(const Graph& g, std::span<const double> x,
                                    std::span<const double> p,
                                    double tol = 1e-9);

}  // namespace siglap

#endif
