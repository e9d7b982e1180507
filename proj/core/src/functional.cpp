#include "siglap/functional.hpp"

#include <algorithm>
#include <cmath>

#include "box_feasibility.hpp"
#include "siglap/errors.hpp"

namespace siglap {

namespace {

void check_size(const Graph& g, std::span<const double> x) {
  if (static_cast<int>(x.size()) != g.vertex_count())
    throw DomainError("vector length does not match vertex count");
}

double max_abs(std::span<const double> x) {
  double m = 0.0;
  for (double v : x) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace

double iplus(const Graph& g, std::span<const double> x) {
  check_size(g, x);
  double total = 0.0;
  for (const auto& e : g.edges())
    total += e.w * std::abs(x[static_cast<size_t>(e.u)] +
                            x[static_cast<size_t>(e.v)]);
  return total;
}

double iminus(const Graph& g, std::span<const double> x) {
  check_size(g, x);
  double total = 0.0;
  for (const auto& e : g.edges())
    total += e.w * std::abs(x[static_cast<size_t>(e.u)] -
                            x[static_cast<size_t>(e.v)]);
  return total;
}

double weighted_norm(const Graph& g, std::span<const double> x) {
  check_size(g, x);
  double total = 0.0;
  for (int i = 0; i < g.vertex_count(); ++i)
    total += g.degree(i) * std::abs(x[static_cast<size_t>(i)]);
  return total;
}

std::vector<double> normalized(const Graph& g, std::span<const double> x) {
  double norm = weighted_norm(g, x);
  if (norm == 0.0) throw DomainError("cannot normalize the zero vector");
  std::vector<double> out(x.begin(), x.end());
  for (double& v : out) v /= norm;
  return out;
}

std::vector<double> norm_subgradient(const Graph& g,
                                     std::span<const double> x) {
  check_size(g, x);
  std::vector<double> v(x.size(), 0.0);
  for (int i = 0; i < g.vertex_count(); ++i) {
    double xi = x[static_cast<size_t>(i)];
    if (xi > 0.0)
      v[static_cast<size_t>(i)] = g.degree(i);
    else if (xi < 0.0)
      v[static_cast<size_t>(i)] = -g.degree(i);
  }
  return v;
}

SpectralVector make_spectral_vector(const Graph& g,
                                    std::vector<double> values) {
  check_size(g, values);
  SpectralVector sv;
  sv.weighted_norm = weighted_norm(g, values);
  sv.iplus = iplus(g, values);
  sv.values = std::move(values);
  return sv;
}

TernaryVector make_ternary(const Graph& g, SetPair pair) {
  pair = make_set_pair(g, std::move(pair.a), std::move(pair.b));
  std::vector<int> support(pair.a);
  support.insert(support.end(), pair.b.begin(), pair.b.end());
  double vol = volume(g, support);
  return {std::move(pair), 1.0 / vol};
}

std::vector<double> ternary_values(const Graph& g, const TernaryVector& t) {
  std::vector<double> x(static_cast<size_t>(g.vertex_count()), 0.0);
  for (int v : t.pair.a) x[static_cast<size_t>(v)] = t.value;
  for (int v : t.pair.b) x[static_cast<size_t>(v)] = -t.value;
  return x;
}

double dual_cheeger_objective(const Graph& g, const SetPair& pair) {
  SetPair checked = make_set_pair(g, pair.a, pair.b);
  std::vector<int> support(checked.a);
  support.insert(support.end(), checked.b.begin(), checked.b.end());
  return 1.0 - 2.0 * cut_weight(g, checked.a, checked.b) / volume(g, support);
}

double lovasz_extension(const Graph& g, const SetPairFunction& f,
                        std::span<const double> x) {
  check_size(g, x);
  std::vector<double> levels;
  levels.reserve(x.size() + 1);
  levels.push_back(0.0);
  for (double v : x)
    if (v != 0.0) levels.push_back(std::abs(v));
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  if (levels.size() < 2) throw DomainError("zero vector has no extension");

  double total = 0.0;
  for (size_t k = 0; k + 1 < levels.size(); ++k) {
    double t = levels[k];
    double width = levels[k + 1] - t;
    SetPair pair;
    for (int i = 0; i < g.vertex_count(); ++i) {
      double xi = x[static_cast<size_t>(i)];
      if (xi > t)
        pair.a.push_back(i);
      else if (-xi > t)
        pair.b.push_back(i);
    }
    if (pair.a.empty() && pair.b.empty()) continue;
    total += width * f.eval(pair);
  }
  return total;
}

SetPairFunction pair_volume_function(const Graph& g) {
  return {"pair_volume", [&g](const SetPair& p) {
            return volume(g, p.a) + volume(g, p.b);
          }};
}

SetPairFunction pair_crossing_function(const Graph& g) {
  return {"pair_crossing",
          [&g](const SetPair& p) { return 2.0 * cut_weight(g, p.a, p.b); }};
}

SetPairFunction pair_defect_function(const Graph& g) {
  return {"pair_defect", [&g](const SetPair& p) {
            return volume(g, p.a) + volume(g, p.b) -
                   2.0 * cut_weight(g, p.a, p.b);
          }};
}

bool iplus_subdifferential_contains(const Graph& g, std::span<const double> x,
                                    std::span<const double> p, double tol) {
  check_size(g, x);
  check_size(g, p);
  const double tau = 1e-12 * max_abs(x);

  // Rows encode sum_j w_ij z_ij - p_i = 0: base = -p, target interval [0, 0].
  detail::BoxFeasibilityProblem prob;
  prob.lo.assign(x.size(), 0.0);
  prob.hi.assign(x.size(), 0.0);
  prob.base.resize(x.size());
  for (size_t r = 0; r < x.size(); ++r) prob.base[r] = -p[r];

  for (const auto& e : g.edges()) {
    double s = x[static_cast<size_t>(e.u)] + x[static_cast<size_t>(e.v)];
    if (s > tau) {
      prob.base[static_cast<size_t>(e.u)] += e.w;
      prob.base[static_cast<size_t>(e.v)] += e.w;
    } else if (s < -tau) {
      prob.base[static_cast<size_t>(e.u)] -= e.w;
      prob.base[static_cast<size_t>(e.v)] -= e.w;
    } else {
      int k = prob.num_vars++;
      prob.entries.emplace_back();
      prob.entries[static_cast<size_t>(k)] = {{e.u, e.w}, {e.v, e.w}};
    }
  }
  return detail::solve_box_feasibility(prob, tol).feasible;
}

}  // namespace siglap
