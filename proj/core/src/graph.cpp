#include "siglap/graph.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <queue>
#include <sstream>

#include "siglap/errors.hpp"

namespace siglap {

Graph Graph::from_edges(int n, std::vector<Edge> edges) {
  if (n <= 0) throw DomainError("graph must have at least one vertex");

  std::map<std::pair<int, int>, bool> seen;
  for (auto& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
      throw DomainError("edge endpoint out of range");
    if (e.u == e.v)
      throw DomainError("self-loop at vertex " + std::to_string(e.u));
    if (!(e.w > 0.0))
      throw DomainError("nonpositive weight unsupported");
    if (e.u > e.v) std::swap(e.u, e.v);
    if (!seen.emplace(std::pair{e.u, e.v}, true).second)
      throw DomainError("duplicate edge " + std::to_string(e.u) + "-" +
                        std::to_string(e.v));
  }

  Graph g;
  g.n_ = n;
  g.edges_ = std::move(edges);
  g.degrees_.assign(static_cast<size_t>(n), 0.0);
  for (const auto& e : g.edges_) {
    g.degrees_[static_cast<size_t>(e.u)] += e.w;
    g.degrees_[static_cast<size_t>(e.v)] += e.w;
    g.total_edge_weight_ += e.w;
  }
  for (int v = 0; v < n; ++v) {
    if (g.degrees_[static_cast<size_t>(v)] == 0.0)
      throw DomainError("isolated vertex " + std::to_string(v));
    g.total_volume_ += g.degrees_[static_cast<size_t>(v)];
  }

  std::vector<size_t> counts(static_cast<size_t>(n), 0);
  for (const auto& e : g.edges_) {
    ++counts[static_cast<size_t>(e.u)];
    ++counts[static_cast<size_t>(e.v)];
  }
  g.offsets_.assign(static_cast<size_t>(n) + 1, 0);
  for (int v = 0; v < n; ++v)
    g.offsets_[static_cast<size_t>(v) + 1] =
        g.offsets_[static_cast<size_t>(v)] + counts[static_cast<size_t>(v)];
  g.incidences_.resize(g.offsets_.back());
  std::vector<size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (int idx = 0; idx < g.edge_count(); ++idx) {
    const auto& e = g.edges_[static_cast<size_t>(idx)];
    g.incidences_[cursor[static_cast<size_t>(e.u)]++] = {e.v, idx, e.w};
    g.incidences_[cursor[static_cast<size_t>(e.v)]++] = {e.u, idx, e.w};
  }
  return g;
}

bool Graph::is_connected() const {
  std::vector<char> visited(static_cast<size_t>(n_), 0);
  std::queue<int> q;
  q.push(0);
  visited[0] = 1;
  int reached = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (const auto& inc : neighbors(v)) {
      if (!visited[static_cast<size_t>(inc.neighbor)]) {
        visited[static_cast<size_t>(inc.neighbor)] = 1;
        ++reached;
        q.push(inc.neighbor);
      }
    }
  }
  return reached == n_;
}

bool Graph::is_bipartite() const {
  std::vector<int> color(static_cast<size_t>(n_), -1);
  for (int start = 0; start < n_; ++start) {
    if (color[static_cast<size_t>(start)] != -1) continue;
    color[static_cast<size_t>(start)] = 0;
    std::queue<int> q;
    q.push(start);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (const auto& inc : neighbors(v)) {
        int& c = color[static_cast<size_t>(inc.neighbor)];
        if (c == -1) {
          c = 1 - color[static_cast<size_t>(v)];
          q.push(inc.neighbor);
        } else if (c == color[static_cast<size_t>(v)]) {
          return false;
        }
      }
    }
  }
  return true;
}

namespace {

void check_vertices(const Graph& g, std::span<const int> s) {
  for (int v : s)
    if (v < 0 || v >= g.vertex_count())
      throw DomainError("vertex " + std::to_string(v) + " out of range");
}

}  // namespace

SetPair make_set_pair(const Graph& g, std::vector<int> a, std::vector<int> b) {
  check_vertices(g, a);
  check_vertices(g, b);
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (std::adjacent_find(a.begin(), a.end()) != a.end() ||
      std::adjacent_find(b.begin(), b.end()) != b.end())
    throw DomainError("set pair side contains a duplicate vertex");
  std::vector<int> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(common));
  if (!common.empty()) throw DomainError("set pair sides are not disjoint");
  if (a.empty() && b.empty()) throw DomainError("set pair union is empty");
  return {std::move(a), std::move(b)};
}

double volume(const Graph& g, std::span<const int> s) {
  check_vertices(g, s);
  double vol = 0.0;
  for (int v : s) vol += g.degree(v);
  return vol;
}

double cut_weight(const Graph& g, std::span<const int> a,
                  std::span<const int> b) {
  check_vertices(g, a);
  check_vertices(g, b);
  std::vector<char> side(static_cast<size_t>(g.vertex_count()), 0);
  for (int v : a) side[static_cast<size_t>(v)] = 1;
  for (int v : b) {
    if (side[static_cast<size_t>(v)] == 1)
      throw DomainError("cut_weight requires disjoint sets");
    side[static_cast<size_t>(v)] = 2;
  }
  double cut = 0.0;
  for (const auto& e : g.edges()) {
    char su = side[static_cast<size_t>(e.u)];
    char sv = side[static_cast<size_t>(e.v)];
    if ((su == 1 && sv == 2) || (su == 2 && sv == 1)) cut += e.w;
  }
  return cut;
}

namespace {

bool blank(const std::string& line) {
  return std::all_of(line.begin(), line.end(),
                     [](unsigned char c) { return std::isspace(c); });
}

}  // namespace

Graph parse_gset(std::istream& in) {
  std::string line;
  int lineno = 0;
  int n = 0;
  long long m = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (blank(line)) continue;
    std::istringstream hs(line);
    std::string extra;
    if (!(hs >> n >> m) || (hs >> extra))
      throw ParseError("expected header \"n m\"", lineno);
    header = true;
    break;
  }
  if (!header) throw ParseError("empty input, expected header \"n m\"");
  if (n <= 0) throw DomainError("vertex count must be positive");
  if (m < 0) throw ParseError("negative edge count", lineno);

  std::vector<Edge> edges;
  edges.reserve(static_cast<size_t>(m));
  long long read = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (blank(line)) continue;
    if (read == m) throw ParseError("unexpected extra line", lineno);
    std::istringstream es(line);
    int u = 0, v = 0;
    double w = 0.0;
    std::string extra;
    if (!(es >> u >> v >> w) || (es >> extra))
      throw ParseError("expected edge line \"u v w\"", lineno);
    if (u < 1 || u > n || v < 1 || v > n)
      throw ParseError("edge endpoint out of range", lineno);
    if (u == v) throw DomainError("line " + std::to_string(lineno) +
                                  ": self-loop at vertex " + std::to_string(u));
    if (!(w > 0.0))
      throw DomainError("line " + std::to_string(lineno) +
                        ": nonpositive weight unsupported");
    edges.push_back({u - 1, v - 1, w});
    ++read;
  }
  if (read != m)
    throw ParseError("header promised " + std::to_string(m) +
                         " edges but file holds " + std::to_string(read),
                     lineno);
  return Graph::from_edges(n, std::move(edges));
}

Graph parse_gset_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_gset(in);
}

Graph parse_gset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  return parse_gset(in);
}

std::string to_gset(const Graph& g) {
  std::ostringstream out;
  out.precision(17);
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges())
    out << e.u + 1 << ' ' << e.v + 1 << ' ' << e.w << '\n';
  return out.str();
}

InducedSubgraph induced_subgraph(const Graph& g,
                                 std::span<const int> vertices) {
  check_vertices(g, vertices);
  std::vector<int> local(static_cast<size_t>(g.vertex_count()), -1);
  std::vector<int> sorted(vertices.begin(), vertices.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw DomainError("induced vertex set contains a duplicate");
  for (size_t i = 0; i < sorted.size(); ++i)
    local[static_cast<size_t>(sorted[i])] = static_cast<int>(i);

  std::vector<double> induced_degree(sorted.size(), 0.0);
  std::vector<Edge> kept;
  for (const auto& e : g.edges()) {
    int lu = local[static_cast<size_t>(e.u)];
    int lv = local[static_cast<size_t>(e.v)];
    if (lu >= 0 && lv >= 0) {
      kept.push_back({lu, lv, e.w});
      induced_degree[static_cast<size_t>(lu)] += e.w;
      induced_degree[static_cast<size_t>(lv)] += e.w;
    }
  }

  InducedSubgraph result;
  std::vector<int> compact(sorted.size(), -1);
  for (size_t i = 0; i < sorted.size(); ++i) {
    if (induced_degree[i] > 0.0) {
      compact[i] = static_cast<int>(result.vertex_map.size());
      result.vertex_map.push_back(sorted[i]);
    } else {
      result.isolated.push_back(sorted[i]);
    }
  }
  if (!result.vertex_map.empty()) {
    for (auto& e : kept) {
      e.u = compact[static_cast<size_t>(e.u)];
      e.v = compact[static_cast<size_t>(e.v)];
    }
    result.graph = Graph::from_edges(static_cast<int>(result.vertex_map.size()),
                                     std::move(kept));
  }
  return result;
}

}  // namespace siglap
