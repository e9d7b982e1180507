#include "siglap/eigenpair.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "box_feasibility.hpp"
#include "siglap/errors.hpp"

namespace siglap {

namespace {

double max_abs(std::span<const double> x) {
  double m = 0.0;
  for (double v : x) m = std::max(m, std::abs(v));
  return m;
}

int sign_of(double v, double tau) {
  if (v > tau) return 1;
  if (v < -tau) return -1;
  return 0;
}

}  // namespace

std::optional<EigenCertificate> verify_eigenpair(const Graph& g,
                                                 std::span<const double> x,
                                                 double tol,
                                                 double sign_scale) {
  std::vector<double> xn = normalized(g, x);
  const double tau = sign_scale * max_abs(xn);
  const double mu = iplus(g, xn);
  const int n = g.vertex_count();

  // Vertex rows: equality mu d_i sgn(x_i) on the support, the interval
  // [-mu d_i, mu d_i] at zeros. Forced edges (nonzero edge sum) move into
  // the row constants; the rest become box variables.
  detail::BoxFeasibilityProblem prob;
  prob.lo.resize(static_cast<size_t>(n));
  prob.hi.resize(static_cast<size_t>(n));
  prob.base.assign(static_cast<size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    int s = sign_of(xn[static_cast<size_t>(i)], tau);
    double bound = mu * g.degree(i);
    prob.lo[static_cast<size_t>(i)] = (s == 1) ? bound : -bound;
    prob.hi[static_cast<size_t>(i)] = (s == -1) ? -bound : bound;
  }

  const int m = g.edge_count();
  std::vector<double> z(static_cast<size_t>(m), 0.0);
  std::vector<int> free_edge;
  for (int idx = 0; idx < m; ++idx) {
    const auto& e = g.edges()[static_cast<size_t>(idx)];
    int s = sign_of(xn[static_cast<size_t>(e.u)] + xn[static_cast<size_t>(e.v)],
                    tau);
    if (s != 0) {
      z[static_cast<size_t>(idx)] = s;
      prob.base[static_cast<size_t>(e.u)] += s * e.w;
      prob.base[static_cast<size_t>(e.v)] += s * e.w;
    } else {
      prob.num_vars++;
      prob.entries.push_back({{e.u, e.w}, {e.v, e.w}});
      free_edge.push_back(idx);
    }
  }

  auto sol = detail::solve_box_feasibility(prob, tol);
  if (!sol.feasible) return std::nullopt;
  for (size_t k = 0; k < free_edge.size(); ++k)
    z[static_cast<size_t>(free_edge[k])] = sol.z[k];

  EigenCertificate cert;
  cert.mu = mu;
  cert.x = make_spectral_vector(g, std::move(xn));
  cert.z = std::move(z);
  cert.tol = tol;
  return cert;
}

std::vector<TernaryEigenpair> enumerate_ternary_eigenpairs(const Graph& g,
                                                           int n_max) {
  const int n = g.vertex_count();
  if (n > n_max)
    throw CapacityError("ternary enumeration limited to " +
                        std::to_string(n_max) + " vertices, graph has " +
                        std::to_string(n));

  std::vector<TernaryEigenpair> found;
  std::vector<int> digits(static_cast<size_t>(n), 0);
  std::vector<double> x(static_cast<size_t>(n), 0.0);

  // Base-3 counter: digit i advances fastest, 0 unlabeled, 1 -> A, 2 -> B.
  while (true) {
    int i = 0;
    while (i < n && digits[static_cast<size_t>(i)] == 2)
      digits[static_cast<size_t>(i++)] = 0;
    if (i == n) break;
    ++digits[static_cast<size_t>(i)];

    double vol = 0.0;
    for (int v = 0; v < n; ++v)
      if (digits[static_cast<size_t>(v)] != 0) vol += g.degree(v);
    for (int v = 0; v < n; ++v) {
      int d = digits[static_cast<size_t>(v)];
      x[static_cast<size_t>(v)] = (d == 0) ? 0.0 : (d == 1 ? 1.0 : -1.0) / vol;
    }
    auto cert = verify_eigenpair(g, x);
    if (cert) {
      SetPair pair;
      for (int v = 0; v < n; ++v) {
        if (digits[static_cast<size_t>(v)] == 1) pair.a.push_back(v);
        if (digits[static_cast<size_t>(v)] == 2) pair.b.push_back(v);
      }
      found.push_back({cert->mu, std::move(pair)});
    }
  }

  std::stable_sort(found.begin(), found.end(),
                   [](const TernaryEigenpair& l, const TernaryEigenpair& r) {
                     return l.mu < r.mu;
                   });
  std::vector<TernaryEigenpair> distinct;
  for (auto& te : found)
    if (distinct.empty() || te.mu - distinct.back().mu > 1e-9)
      distinct.push_back(std::move(te));
  return distinct;
}

bool spectral_gap_check(std::span<const double> sorted_mus, int n) {
  if (n < 2) throw DomainError("gap bound needs at least two vertices");
  const double bound =
      2.0 / (static_cast<double>(n) * n * (n - 1.0) * (n - 1.0));
  for (size_t i = 0; i + 1 < sorted_mus.size(); ++i)
    if (sorted_mus[i + 1] - sorted_mus[i] < bound - 1e-9) return false;
  return true;
}

NodalDecomposition nodal_domains(const Graph& g, std::span<const double> x) {
  if (static_cast<int>(x.size()) != g.vertex_count())
    throw DomainError("vector length does not match vertex count");
  const double tau = 1e-12 * max_abs(x);
  const int n = g.vertex_count();

  NodalDecomposition dec;
  std::vector<char> visited(static_cast<size_t>(n), 0);
  for (int start = 0; start < n; ++start) {
    if (visited[static_cast<size_t>(start)] ||
        std::abs(x[static_cast<size_t>(start)]) <= tau)
      continue;
    std::vector<int> domain;
    std::queue<int> q;
    q.push(start);
    visited[static_cast<size_t>(start)] = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      domain.push_back(v);
      for (const auto& inc : g.neighbors(v)) {
        if (!visited[static_cast<size_t>(inc.neighbor)] &&
            std::abs(x[static_cast<size_t>(inc.neighbor)]) > tau) {
          visited[static_cast<size_t>(inc.neighbor)] = 1;
          q.push(inc.neighbor);
        }
      }
    }
    std::sort(domain.begin(), domain.end());
    dec.domains.push_back(std::move(domain));
  }
  dec.count = static_cast<int>(dec.domains.size());
  return dec;
}

DomainRestriction restrict_to_domain(const Graph& g,
                                     const EigenCertificate& cert,
                                     int domain_index) {
  auto dec = nodal_domains(g, cert.x.values);
  if (domain_index < 0 || domain_index >= dec.count)
    throw DomainError("nodal domain index out of range");
  const auto& domain = dec.domains[static_cast<size_t>(domain_index)];

  double restricted_norm = 0.0;
  double domain_volume = 0.0;
  for (int v : domain) {
    restricted_norm +=
        g.degree(v) * std::abs(cert.x.values[static_cast<size_t>(v)]);
    domain_volume += g.degree(v);
  }

  std::vector<double> restricted(cert.x.values.size(), 0.0);
  std::vector<double> flattened(cert.x.values.size(), 0.0);
  for (int v : domain) {
    double xv = cert.x.values[static_cast<size_t>(v)];
    restricted[static_cast<size_t>(v)] = xv / restricted_norm;
    flattened[static_cast<size_t>(v)] =
        (xv > 0.0 ? 1.0 : -1.0) / domain_volume;
  }
  return {make_spectral_vector(g, std::move(restricted)),
          make_spectral_vector(g, std::move(flattened))};
}

bool simplex_closure_check(const Graph& g, const EigenCertificate& cert,
                           std::span<const double> y) {
  if (static_cast<int>(y.size()) != g.vertex_count())
    throw DomainError("vector length does not match vertex count");
  const auto& x = cert.x.values;
  if (max_abs(y) == 0.0) return false;  // closure points keep norm 1
  const double tau_x = 1e-12 * max_abs(x);
  const double tau_y = 1e-12 * max_abs(y);

  // Membership in the closed simplex: y may only keep x's sign or vanish,
  // never flip or create support, both per vertex and per edge sum.
  auto compatible = [](int sy, int sx) { return sy == 0 || sy == sx; };
  for (int i = 0; i < g.vertex_count(); ++i) {
    if (!compatible(sign_of(y[static_cast<size_t>(i)], tau_y),
                    sign_of(x[static_cast<size_t>(i)], tau_x)))
      return false;
  }
  for (const auto& e : g.edges()) {
    double sy = y[static_cast<size_t>(e.u)] + y[static_cast<size_t>(e.v)];
    double sx = x[static_cast<size_t>(e.u)] + x[static_cast<size_t>(e.v)];
    if (!compatible(sign_of(sy, tau_y), sign_of(sx, tau_x))) return false;
  }
  return true;
}

}  // namespace siglap
