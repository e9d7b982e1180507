#include "siglap/ipm.hpp"

#include <Eigen/Dense>
#include <Eigen/SparseCholesky>
#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <random>
#include <thread>

#include "siglap/cut.hpp"
#include "siglap/errors.hpp"

namespace siglap {

namespace {

double max_abs(std::span<const double> x) {
  double m = 0.0;
  for (double v : x) m = std::max(m, std::abs(v));
  return m;
}

std::uint64_t splitmix64(std::uint64_t state) {
  std::uint64_t z = state + 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Holds the per-graph factorization of (B^T B + I), where B is the 0/1
// edge-sum incidence, reused by every x step of the ADMM iteration.
class InnerContext {
public:
  explicit InnerContext(const Graph& g) : g_(g) {
    const int n = g.vertex_count();
    std::vector<Eigen::Triplet<double>> triplets;
    triplets.reserve(static_cast<size_t>(n) + 2 * g.edges().size());
    std::vector<double> diag(static_cast<size_t>(n), 1.0);
    for (const auto& e : g.edges()) {
      diag[static_cast<size_t>(e.u)] += 1.0;
      diag[static_cast<size_t>(e.v)] += 1.0;
      triplets.emplace_back(e.u, e.v, 1.0);
      triplets.emplace_back(e.v, e.u, 1.0);
    }
    for (int i = 0; i < n; ++i) triplets.emplace_back(i, i, diag[static_cast<size_t>(i)]);
    Eigen::SparseMatrix<double> a(n, n);
    a.setFromTriplets(triplets.begin(), triplets.end());
    ldlt_.compute(a);
    if (ldlt_.info() != Eigen::Success)
      throw ContractViolation("factorization of the inner system failed");
  }

  const Graph& graph() const { return g_; }

  Eigen::VectorXd solve(const Eigen::VectorXd& rhs) const {
    return ldlt_.solve(rhs);
  }

private:
  const Graph& g_;
  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> ldlt_;
};

double objective_f(const Graph& g, double lambda, const Eigen::VectorXd& v,
                   const Eigen::VectorXd& x) {
  double total = 0.0;
  for (const auto& e : g.edges()) total += e.w * std::abs(x[e.u] + x[e.v]);
  return total - lambda * v.dot(x);
}

std::vector<double> admm_inner(const InnerContext& ctx, double lambda,
                               std::span<const double> v,
                               std::span<const double> warm,
                               const IpmConfig& cfg) {
  const Graph& g = ctx.graph();
  const int n = g.vertex_count();
  const int m = g.edge_count();
  if (lambda < 0.0) throw DomainError("lambda must be nonnegative");
  if (static_cast<int>(v.size()) != n || static_cast<int>(warm.size()) != n)
    throw DomainError("vector length does not match vertex count");

  Eigen::VectorXd x = Eigen::Map<const Eigen::VectorXd>(warm.data(), n);
  double warm_l2 = x.norm();
  if (warm_l2 == 0.0) throw DomainError("warm start must be nonzero");
  x /= warm_l2;
  const Eigen::VectorXd warm_scaled = x;
  const Eigen::VectorXd vv = Eigen::Map<const Eigen::VectorXd>(v.data(), n);
  const double f_warm = objective_f(g, lambda, vv, warm_scaled);

  const double rho = 1.0;
  const double tol = cfg.inner_tol;
  Eigen::VectorXd y(m), uy = Eigen::VectorXd::Zero(m);
  Eigen::VectorXd s = x, us = Eigen::VectorXd::Zero(n);
  for (int e = 0; e < m; ++e) {
    const auto& ed = g.edges()[static_cast<size_t>(e)];
    y[e] = x[ed.u] + x[ed.v];
  }

  Eigen::VectorXd bx(m), rhs(n), y_old(m), s_old(n), dual_vec(n), atu(n);
  for (int it = 0; it < cfg.inner_max_iter; ++it) {
    rhs = (lambda / rho) * vv + (s - us);
    for (int e = 0; e < m; ++e) {
      const auto& ed = g.edges()[static_cast<size_t>(e)];
      double t = y[e] - uy[e];
      rhs[ed.u] += t;
      rhs[ed.v] += t;
    }
    x = ctx.solve(rhs);

    for (int e = 0; e < m; ++e) {
      const auto& ed = g.edges()[static_cast<size_t>(e)];
      bx[e] = x[ed.u] + x[ed.v];
    }

    y_old = y;
    s_old = s;
    for (int e = 0; e < m; ++e) {
      double t = bx[e] + uy[e];
      double shrink = g.edges()[static_cast<size_t>(e)].w / rho;
      y[e] = (t > shrink) ? t - shrink : (t < -shrink ? t + shrink : 0.0);
    }
    s = x + us;
    double s_norm = s.norm();
    if (s_norm > 1.0) s /= s_norm;

    uy += bx - y;
    us += x - s;

    double primal =
        std::sqrt((bx - y).squaredNorm() + (x - s).squaredNorm());
    dual_vec = s - s_old;
    for (int e = 0; e < m; ++e) {
      const auto& ed = g.edges()[static_cast<size_t>(e)];
      double d = y[e] - y_old[e];
      dual_vec[ed.u] += d;
      dual_vec[ed.v] += d;
    }
    double dual = rho * dual_vec.norm();

    double ax_norm = std::sqrt(bx.squaredNorm() + x.squaredNorm());
    double z_norm = std::sqrt(y.squaredNorm() + s.squaredNorm());
    atu = us;
    for (int e = 0; e < m; ++e) {
      const auto& ed = g.edges()[static_cast<size_t>(e)];
      atu[ed.u] += uy[e];
      atu[ed.v] += uy[e];
    }
    double eps_primal =
        std::sqrt(static_cast<double>(m + n)) * tol + tol * std::max(ax_norm, z_norm);
    double eps_dual =
        std::sqrt(static_cast<double>(n)) * tol + tol * rho * atu.norm();
    if (primal <= eps_primal && dual <= eps_dual) break;
  }

  // The ball-feasible candidates; keep whichever has the smallest exact F,
  // never worse than the scaled warm start itself.
  Eigen::VectorXd cx = x;
  double x_norm = cx.norm();
  if (x_norm > 1.0) cx /= x_norm;
  const Eigen::VectorXd* best = &warm_scaled;
  double f_best = f_warm;
  double f_cx = objective_f(g, lambda, vv, cx);
  if (f_cx < f_best) {
    f_best = f_cx;
    best = &cx;
  }
  double f_s = objective_f(g, lambda, vv, s);
  if (f_s < f_best) {
    f_best = f_s;
    best = &s;
  }
  return {best->data(), best->data() + n};
}

std::optional<EigenCertificate> attempt_certificate(
    const Graph& g, const std::vector<double>& x, const IpmConfig& cfg) {
  auto cert = verify_eigenpair(g, x, cfg.certificate_tol);
  if (cert) return cert;

  // Fall back to the ternary flattening of the signed support: flattening
  // preserves eigenpairs, and its exact coordinate values avoid the
  // residual noise of the iterate.
  double threshold = 1e-6 * max_abs(x);
  SetPair pair;
  for (int i = 0; i < g.vertex_count(); ++i) {
    if (x[static_cast<size_t>(i)] > threshold) pair.a.push_back(i);
    else if (x[static_cast<size_t>(i)] < -threshold) pair.b.push_back(i);
  }
  if (pair.a.empty() && pair.b.empty()) return std::nullopt;
  auto tern = ternary_values(g, make_ternary(g, std::move(pair)));
  return verify_eigenpair(g, tern, 1e-9);
}

IpmTrace run_with_context(const InnerContext& ctx, std::span<const double> x0,
                          const IpmConfig& cfg) {
  const Graph& g = ctx.graph();
  std::vector<double> xn = normalized(g, x0);

  IpmTrace trace;
  trace.lambdas.push_back(iplus(g, xn));
  while (true) {
    double lam = trace.lambdas.back();
    if (lam == 0.0) {
      trace.reason = IpmStop::reached_zero;
      break;
    }
    if (trace.iterations() >= cfg.max_outer) {
      trace.reason = IpmStop::iteration_cap;
      break;
    }
    auto v = norm_subgradient(g, xn);
    auto xhat = admm_inner(ctx, lam, v, xn, cfg);
    double wn = weighted_norm(g, xhat);
    std::vector<double> xnext;
    if (wn < 1e-300) {
      xnext = xn;
    } else {
      xnext = std::move(xhat);
      for (double& t : xnext) t /= wn;
    }
    double lam_next = iplus(g, xnext);
    if (lam_next > lam) {  // numeric guard; descent is guaranteed exactly
      xnext = xn;
      lam_next = lam;
    }
    xn = std::move(xnext);
    trace.lambdas.push_back(lam_next);
    if (std::abs(lam_next - lam) < cfg.outer_tol * std::abs(lam)) {
      trace.reason = IpmStop::converged;
      break;
    }
  }
  trace.x = make_spectral_vector(g, std::move(xn));
  trace.certificate = attempt_certificate(g, trace.x.values, cfg);
  return trace;
}

}  // namespace

std::vector<double> inner_solve(const Graph& g, double lambda,
                                std::span<const double> v,
                                std::span<const double> warm,
                                const IpmConfig& cfg) {
  InnerContext ctx(g);
  return admm_inner(ctx, lambda, v, warm, cfg);
}

IpmTrace ipm_run(const Graph& g, std::span<const double> x0,
                 const IpmConfig& cfg) {
  InnerContext ctx(g);
  return run_with_context(ctx, x0, cfg);
}

MultistartResult ipm_multistart(const Graph& g, int restarts,
                                const IpmConfig& cfg, int threads) {
  if (restarts < 1) throw DomainError("restarts must be at least 1");
  const int n = g.vertex_count();
  const int total = restarts + 1;

  std::vector<std::vector<double>> starts(static_cast<size_t>(total));
  try {
    starts[0] = d2_relaxation_vector(g).direction;
  } catch (const ConvergenceError&) {
    // Best effort: fall back to the same vector the power iteration
    // starts from.
    starts[0].assign(static_cast<size_t>(n), 1.0);
    starts[0][0] += 1e-3;
  }
  for (int i = 1; i < total; ++i) {
    std::mt19937_64 rng(splitmix64(
        cfg.rng_seed ^ (0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(i))));
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    auto& start = starts[static_cast<size_t>(i)];
    start.resize(static_cast<size_t>(n));
    do {
      for (double& t : start) t = unit(rng);
    } while (weighted_norm(g, start) < 1e-9);
  }

  std::vector<IpmTrace> traces(static_cast<size_t>(total));
  int worker_count = threads > 0
                         ? threads
                         : static_cast<int>(std::thread::hardware_concurrency());
  worker_count = std::clamp(worker_count, 1, total);

  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&]() {
    try {
      InnerContext ctx(g);
      for (int i = next.fetch_add(1); i < total; i = next.fetch_add(1))
        traces[static_cast<size_t>(i)] =
            run_with_context(ctx, starts[static_cast<size_t>(i)], cfg);
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };
  if (worker_count == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(worker_count));
    for (int t = 0; t < worker_count; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  MultistartResult result;
  result.final_lambdas.reserve(static_cast<size_t>(total));
  int best = 0;
  for (int i = 0; i < total; ++i) {
    result.final_lambdas.push_back(traces[static_cast<size_t>(i)].lambda_star());
    if (traces[static_cast<size_t>(i)].lambda_star() <
        traces[static_cast<size_t>(best)].lambda_star())
      best = i;
  }
  result.best_index = best;
  result.best = std::move(traces[static_cast<size_t>(best)]);
  result.pair = two_threshold_round(g, result.best.x.values,
                                    CutObjective::ratio_with_frontier)
                    .first;
  return result;
}

}  // namespace siglap
