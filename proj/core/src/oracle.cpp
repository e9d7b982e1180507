#include "siglap/oracle.hpp"

#include <cmath>
#include <string>

#include "siglap/errors.hpp"

namespace siglap {

DualCheegerOracle oracle_dual_cheeger(const Graph& g, int n_max) {
  const int n = g.vertex_count();
  if (n > n_max)
    throw CapacityError("dual Cheeger oracle limited to " +
                        std::to_string(n_max) + " vertices, graph has " +
                        std::to_string(n));

  DualCheegerOracle best;
  std::vector<char> digits(static_cast<size_t>(n), 0);
  // Base-3 counter over vertex labels: 0 unlabeled, 1 -> A, 2 -> B.
  while (true) {
    int i = 0;
    while (i < n && digits[static_cast<size_t>(i)] == 2)
      digits[static_cast<size_t>(i++)] = 0;
    if (i == n) break;
    ++digits[static_cast<size_t>(i)];
    ++best.enumerated;

    double vol = 0.0;
    for (int v = 0; v < n; ++v)
      if (digits[static_cast<size_t>(v)] != 0) vol += g.degree(v);
    double cut = 0.0;
    for (const auto& e : g.edges()) {
      char du = digits[static_cast<size_t>(e.u)];
      char dv = digits[static_cast<size_t>(e.v)];
      if (du != 0 && dv != 0 && du != dv) cut += e.w;
    }
    double value = 2.0 * cut / vol;
    if (value > best.h_plus) {  // strict: first witness wins ties
      best.h_plus = value;
      best.witness.a.clear();
      best.witness.b.clear();
      for (int v = 0; v < n; ++v) {
        if (digits[static_cast<size_t>(v)] == 1) best.witness.a.push_back(v);
        if (digits[static_cast<size_t>(v)] == 2) best.witness.b.push_back(v);
      }
    }
  }
  return best;
}

MaxcutOracle oracle_maxcut(const Graph& g, int n_max) {
  const int n = g.vertex_count();
  if (n > n_max)
    throw CapacityError("maxcut oracle limited to " + std::to_string(n_max) +
                        " vertices, graph has " + std::to_string(n));

  MaxcutOracle best;
  best.cut_weight = -1.0;
  const std::uint64_t masks = (n > 1) ? (1ull << (n - 1)) : 1;
  std::vector<char> side(static_cast<size_t>(n), 0);
  for (std::uint64_t mask = 0; mask < masks; ++mask) {
    ++best.enumerated;
    for (int v = 1; v < n; ++v)
      side[static_cast<size_t>(v)] =
          static_cast<char>((mask >> (v - 1)) & 1ull);
    double cut = 0.0;
    for (const auto& e : g.edges())
      if (side[static_cast<size_t>(e.u)] != side[static_cast<size_t>(e.v)])
        cut += e.w;
    if (cut > best.cut_weight) {
      best.cut_weight = cut;
      best.witness.clear();
      for (int v = 0; v < n; ++v)
        if (side[static_cast<size_t>(v)] == 0) best.witness.push_back(v);
    }
  }
  best.fraction = best.cut_weight / g.total_edge_weight();
  best.h_max = 2.0 * best.cut_weight / g.total_volume();
  return best;
}

bool oracle_ordering_check(const Graph& g, int n_max) {
  auto dual = oracle_dual_cheeger(g, n_max);
  auto cut = oracle_maxcut(g, n_max);
  return cut.h_max > 0.0 && cut.h_max <= dual.h_plus + 1e-12 &&
         dual.h_plus <= 1.0 + 1e-12;
}

}  // namespace siglap
