#include "siglap/cut.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "siglap/errors.hpp"
#include "siglap/functional.hpp"

namespace siglap {

namespace {

std::uint64_t splitmix64(std::uint64_t state) {
  std::uint64_t z = state + 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::vector<double> positive_levels(const Graph& g, std::span<const double> x) {
  if (static_cast<int>(x.size()) != g.vertex_count())
    throw DomainError("vector length does not match vertex count");
  std::vector<double> levels;
  for (double v : x)
    if (v != 0.0) levels.push_back(std::abs(v));
  if (levels.empty()) throw DomainError("cannot round the zero vector");
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  return levels;
}

CutScore score_pair(const Graph& g, const std::vector<char>& side) {
  CutScore score;
  for (const auto& e : g.edges()) {
    char su = side[static_cast<size_t>(e.u)];
    char sv = side[static_cast<size_t>(e.v)];
    if (su == 0 && sv == 0) continue;
    score.incident += e.w;
    if (su == 0 || sv == 0)
      score.frontier += e.w;
    else if (su != sv)
      score.crossing += e.w;
  }
  return score;
}

}  // namespace

std::pair<SetPair, CutScore> two_threshold_round(const Graph& g,
                                                 std::span<const double> x,
                                                 CutObjective objective) {
  const auto levels = positive_levels(g, x);
  const int n = g.vertex_count();

  SetPair best_pair;
  CutScore best_score;
  double best_value = -1.0;
  std::vector<char> side(static_cast<size_t>(n));
  for (double t : levels) {
    SetPair pair;
    for (int i = 0; i < n; ++i) {
      double xi = x[static_cast<size_t>(i)];
      side[static_cast<size_t>(i)] = (xi >= t) ? 1 : (xi <= -t ? 2 : 0);
      if (side[static_cast<size_t>(i)] == 1) pair.a.push_back(i);
      if (side[static_cast<size_t>(i)] == 2) pair.b.push_back(i);
    }
    CutScore score = score_pair(g, side);
    double value = (objective == CutObjective::ratio) ? score.objective1()
                                                      : score.objective2();
    if (value > best_value) {  // ties keep the smaller threshold
      best_value = value;
      best_pair = std::move(pair);
      best_score = score;
    }
  }
  return {std::move(best_pair), best_score};
}

SetPair coarea_certified_round(const Graph& g, std::span<const double> x) {
  const auto levels = positive_levels(g, x);
  const double quotient = iplus(g, x) / weighted_norm(g, x);
  const int n = g.vertex_count();

  SetPair best_pair;
  double best_value = 2.0;
  std::vector<char> side(static_cast<size_t>(n));
  for (double t : levels) {
    SetPair pair;
    double vol = 0.0;
    for (int i = 0; i < n; ++i) {
      double xi = x[static_cast<size_t>(i)];
      side[static_cast<size_t>(i)] = (xi >= t) ? 1 : (xi <= -t ? 2 : 0);
      if (side[static_cast<size_t>(i)] != 0) {
        vol += g.degree(i);
        if (side[static_cast<size_t>(i)] == 1) pair.a.push_back(i);
        else pair.b.push_back(i);
      }
    }
    double crossing = 0.0;
    for (const auto& e : g.edges()) {
      char su = side[static_cast<size_t>(e.u)];
      char sv = side[static_cast<size_t>(e.v)];
      if (su != 0 && sv != 0 && su != sv) crossing += e.w;
    }
    double value = 1.0 - 2.0 * crossing / vol;
    if (value < best_value) {
      best_value = value;
      best_pair = std::move(pair);
    }
  }

  if (best_value > quotient + 1e-12)
    throw ContractViolation(
        "threshold rounding exceeded the functional quotient");
  return best_pair;
}

D2Relaxation d2_relaxation_vector(const Graph& g, double tol, int max_iter) {
  const int n = g.vertex_count();
  std::vector<double> inv_sqrt_deg(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    inv_sqrt_deg[static_cast<size_t>(i)] = 1.0 / std::sqrt(g.degree(i));

  std::vector<double> u(static_cast<size_t>(n), 1.0);
  u[0] += 1e-3;
  auto l2 = [](const std::vector<double>& v) {
    double s = 0.0;
    for (double t : v) s += t * t;
    return std::sqrt(s);
  };
  double norm = l2(u);
  for (double& t : u) t /= norm;

  // Applies the degree-normalized Laplacian; its top eigenpair is the
  // 2-Laplacian relaxation target.
  std::vector<double> hu(static_cast<size_t>(n));
  auto apply = [&](const std::vector<double>& in, std::vector<double>& out) {
    std::copy(in.begin(), in.end(), out.begin());
    for (const auto& e : g.edges()) {
      double c = e.w * inv_sqrt_deg[static_cast<size_t>(e.u)] *
                 inv_sqrt_deg[static_cast<size_t>(e.v)];
      out[static_cast<size_t>(e.u)] -= c * in[static_cast<size_t>(e.v)];
      out[static_cast<size_t>(e.v)] -= c * in[static_cast<size_t>(e.u)];
    }
  };

  double best_residual = std::numeric_limits<double>::infinity();
  for (int it = 0; it < max_iter; ++it) {
    apply(u, hu);
    double theta = 0.0;
    for (int i = 0; i < n; ++i)
      theta += u[static_cast<size_t>(i)] * hu[static_cast<size_t>(i)];
    double residual = 0.0;
    for (int i = 0; i < n; ++i) {
      double r = hu[static_cast<size_t>(i)] - theta * u[static_cast<size_t>(i)];
      residual += r * r;
    }
    residual = std::sqrt(residual);
    best_residual = std::min(best_residual, residual);
    if (residual <= tol) {
      D2Relaxation result;
      result.direction.resize(static_cast<size_t>(n));
      for (int i = 0; i < n; ++i)
        result.direction[static_cast<size_t>(i)] =
            u[static_cast<size_t>(i)] * inv_sqrt_deg[static_cast<size_t>(i)];
      result.eigenvalue = theta;
      result.iterations = it + 1;
      return result;
    }
    double hn = l2(hu);
    if (hn == 0.0)
      throw ConvergenceError("power iteration start lies in the kernel",
                             best_residual);
    for (int i = 0; i < n; ++i)
      u[static_cast<size_t>(i)] = hu[static_cast<size_t>(i)] / hn;
  }
  throw ConvergenceError("power iteration did not reach tolerance",
                         best_residual);
}

CutResult greedy_cut(const Graph& g, std::span<const int> order) {
  const int n = g.vertex_count();
  if (static_cast<int>(order.size()) != n)
    throw DomainError("greedy order must list every vertex exactly once");
  std::vector<char> seen(static_cast<size_t>(n), 0);
  for (int v : order) {
    if (v < 0 || v >= n || seen[static_cast<size_t>(v)])
      throw DomainError("greedy order must list every vertex exactly once");
    seen[static_cast<size_t>(v)] = 1;
  }

  // -1 unplaced, 0 side_s, 1 side_t
  std::vector<char> side(static_cast<size_t>(n), -1);
  for (int v : order) {
    double to_s = 0.0, to_t = 0.0;
    for (const auto& inc : g.neighbors(v)) {
      char c = side[static_cast<size_t>(inc.neighbor)];
      if (c == 0) to_s += inc.weight;
      if (c == 1) to_t += inc.weight;
    }
    // Placing opposite the heavier placed side cuts the most; ties to S.
    side[static_cast<size_t>(v)] = (to_t >= to_s) ? 0 : 1;
  }

  CutResult result;
  for (int v = 0; v < n; ++v)
    (side[static_cast<size_t>(v)] == 0 ? result.side_s : result.side_t)
        .push_back(v);
  result.cut_weight = cut_weight(g, result.side_s, result.side_t);
  result.cut_fraction = result.cut_weight / g.total_edge_weight();
  result.provenance = CutProvenance::greedy;
  if (result.cut_fraction < 0.5 - 1e-9)
    throw ContractViolation("greedy cut fell below half the edge weight");
  return result;
}

namespace {

// Bipartition of gt's vertices: 0 = side_s, 1 = side_t.
std::vector<char> rsc_worker(const Graph& gt, RscSolver solver,
                             CutObjective objective, const RscConfig& cfg,
                             int depth) {
  const int n = gt.vertex_count();

  std::vector<double> x;
  if (solver == RscSolver::d1) {
    IpmConfig level_cfg = cfg.ipm;
    level_cfg.rng_seed = splitmix64(
        cfg.ipm.rng_seed ^ (0xd1ull + static_cast<std::uint64_t>(depth)));
    x = ipm_multistart(gt, cfg.restarts, level_cfg, cfg.threads)
            .best.x.values;
  } else {
    x = d2_relaxation_vector(gt, cfg.d2_tol, cfg.d2_max_iter).direction;
  }

  auto [pair, score] = two_threshold_round(gt, x, objective);
  if (score.objective2() <= 0.5) {
    // A pair this weak cannot beat plain greedy; finish the level with it.
    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    if (cfg.greedy_random_order) {
      std::mt19937_64 rng(splitmix64(cfg.ipm.rng_seed ^
                                     (0x6eedull + static_cast<std::uint64_t>(depth))));
      std::shuffle(order.begin(), order.end(), rng);
    }
    auto res = greedy_cut(gt, order);
    std::vector<char> side(static_cast<size_t>(n), 0);
    for (int v : res.side_t) side[static_cast<size_t>(v)] = 1;
    return side;
  }

  std::vector<char> in_pair(static_cast<size_t>(n), 0);
  for (int v : pair.a) in_pair[static_cast<size_t>(v)] = 1;
  for (int v : pair.b) in_pair[static_cast<size_t>(v)] = 2;
  std::vector<int> remainder;
  for (int v = 0; v < n; ++v)
    if (in_pair[static_cast<size_t>(v)] == 0) remainder.push_back(v);

  // Remainder assignment (defaults to side_s for vertices the recursion
  // never sees: zero residual degree or an edgeless remainder).
  std::vector<char> rem_side(static_cast<size_t>(n), 0);
  if (!remainder.empty()) {
    auto sub = induced_subgraph(gt, remainder);
    if (sub.graph) {
      auto rec = rsc_worker(*sub.graph, solver, objective, cfg, depth + 1);
      for (size_t l = 0; l < sub.vertex_map.size(); ++l)
        rem_side[static_cast<size_t>(sub.vertex_map[l])] = rec[l];
    }
  }

  // Keep the fixed pair on opposite sides and merge the recursive cut in
  // whichever orientation cuts more weight in this level's graph.
  auto side_of = [&](int v, bool flipped) -> char {
    char c = in_pair[static_cast<size_t>(v)];
    if (c == 1) return 0;
    if (c == 2) return 1;
    char r = rem_side[static_cast<size_t>(v)];
    return flipped ? static_cast<char>(1 - r) : r;
  };
  double w_keep = 0.0, w_flip = 0.0;
  for (const auto& e : gt.edges()) {
    if (side_of(e.u, false) != side_of(e.v, false)) w_keep += e.w;
    if (side_of(e.u, true) != side_of(e.v, true)) w_flip += e.w;
  }
  const bool flip = w_flip > w_keep;
  std::vector<char> side(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) side[static_cast<size_t>(v)] = side_of(v, flip);
  return side;
}

}  // namespace

CutResult rsc_maxcut(const Graph& g, RscSolver solver, CutObjective objective,
                     const RscConfig& cfg) {
  auto side = rsc_worker(g, solver, objective, cfg, 0);

  CutResult result;
  for (int v = 0; v < g.vertex_count(); ++v)
    (side[static_cast<size_t>(v)] == 0 ? result.side_s : result.side_t)
        .push_back(v);
  result.cut_weight = cut_weight(g, result.side_s, result.side_t);
  result.cut_fraction = result.cut_weight / g.total_edge_weight();
  result.provenance = (solver == RscSolver::d1) ? CutProvenance::d1_rsc
                                                : CutProvenance::d2_rsc;
  result.objective = objective;
  return result;
}

double rsc_cost_bound(double epsilon) {
  if (epsilon < 0.0 || epsilon > 0.5)
    throw DomainError("cost bound defined on [0, 1/2]");
  if (epsilon == 0.0) return 1.0;
  return 1.0 - epsilon + epsilon * std::log(2.0 * epsilon);
}

double approximation_ratio_floor() {
  auto ratio = [](double e) { return rsc_cost_bound(e) / (1.0 - e); };
  const int grid = 1 << 12;
  double best_e = 0.0, best = ratio(0.0);
  for (int i = 1; i <= grid; ++i) {
    double e = 0.5 * i / grid;
    double r = ratio(e);
    if (r < best) {
      best = r;
      best_e = e;
    }
  }
  double lo = std::max(0.0, best_e - 0.5 / grid);
  double hi = std::min(0.5, best_e + 0.5 / grid);
  for (int i = 0; i < 200; ++i) {
    double m1 = lo + (hi - lo) / 3.0;
    double m2 = hi - (hi - lo) / 3.0;
    if (ratio(m1) < ratio(m2))
      hi = m2;
    else
      lo = m1;
  }
  return std::min(best, ratio(0.5 * (lo + hi)));
}

}  // namespace siglap
