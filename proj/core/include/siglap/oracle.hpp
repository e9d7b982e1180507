#ifndef SIGLAP_ORACLE_HPP
#define SIGLAP_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "siglap/graph.hpp"

namespace siglap {

// Exhaustive maximum of 2 cut(A, B) / vol(A u B) over all 3^n - 1 labeled
// set pairs. Ties keep the first witness in enumeration order (vertex i is
// digit i of the base-3 counter). Throws CapacityError above n_max.
struct DualCheegerOracle {
  double h_plus = 0.0;
  SetPair witness;
  std::uint64_t enumerated = 0;
};
DualCheegerOracle oracle_dual_cheeger(const Graph& g, int n_max = 14);

// Exhaustive maxcut over all 2^(n-1) bipartitions (vertex 0 pinned to the
// witness side). Reports the best cut weight, its fraction of the total
// edge weight, and the volume-normalized value 2 cut / vol(V).
struct MaxcutOracle {
  double cut_weight = 0.0;
  double fraction = 0.0;
  double h_max = 0.0;
  std::vector<int> witness;
  std::uint64_t enumerated = 0;
};
MaxcutOracle oracle_maxcut(const Graph& g, int n_max = 20);

// Sanity ordering that holds on every graph: 0 < h_max <= h_plus <= 1.
bool oracle_ordering_check(const Graph& g, int n_max = 14);

}  // namespace siglap

#endif
