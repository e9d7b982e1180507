#ifndef SIGLAP_GRAPH_HPP
#define SIGLAP_GRAPH_HPP

#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace siglap {

struct Edge {
  int u;
  int v;
  double w;
};

// Finite undirected graph with strictly positive edge weights, no
// self-loops, no parallel edges, and no isolated vertices. Vertices are
// 0-based. Immutable after construction; degrees and the total volume are
// precomputed, and a CSR adjacency supports O(deg) neighbor iteration.
class Graph {
public:
  struct Incidence {
    int neighbor;
    int edge;  // index into edges()
    double weight;
  };

  // Validates and normalizes (each edge stored with u < v). Throws
  // DomainError on self-loops, duplicate edges (either orientation),
  // nonpositive weights, out-of-range endpoints, or isolated vertices.
  static Graph from_edges(int n, std::vector<Edge> edges);

  int vertex_count() const noexcept { return n_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  double degree(int v) const { return degrees_[static_cast<size_t>(v)]; }
  const std::vector<double>& degrees() const noexcept { return degrees_; }

  // Sum of all weighted degrees (= twice the total edge weight).
  double total_volume() const noexcept { return total_volume_; }
  double total_edge_weight() const noexcept { return total_edge_weight_; }

  std::span<const Incidence> neighbors(int v) const {
    auto lo = offsets_[static_cast<size_t>(v)];
    auto hi = offsets_[static_cast<size_t>(v) + 1];
    return {incidences_.data() + lo, incidences_.data() + hi};
  }

  bool is_connected() const;
  bool is_bipartite() const;

private:
  Graph() = default;

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<double> degrees_;
  double total_volume_ = 0.0;
  double total_edge_weight_ = 0.0;
  std::vector<size_t> offsets_;
  std::vector<Incidence> incidences_;
};

// An ordered pair of disjoint vertex sets with nonempty union. The sets
// are kept sorted; either side may be empty.
struct SetPair {
  std::vector<int> a;
  std::vector<int> b;
};

// Sorts both sides and validates: in-range vertices, no duplicates,
// disjoint sides, nonempty union. Throws DomainError otherwise.
SetPair make_set_pair(const Graph& g, std::vector<int> a, std::vector<int> b);

// Sum of weighted degrees over the set. Throws DomainError on bad indices.
double volume(const Graph& g, std::span<const int> s);

// Total weight of edges with one endpoint in a and the other in b.
// Preconditions: disjoint sets of valid vertices.
double cut_weight(const Graph& g, std::span<const int> a,
                  std::span<const int> b);

// Reads the plain text exchange format: a header line "n m" followed by m
// lines "u v w" with 1-based endpoints. Rejects self-loops, duplicate
// edges, nonpositive weights, and graphs with isolated vertices.
Graph parse_gset(std::istream& in);
Graph parse_gset_text(std::string_view text);
Graph parse_gset_file(const std::string& path);

// Serializes back to the same text format (1-based, one edge per line).
std::string to_gset(const Graph& g);

// Induced subgraph on the given vertices. Vertices whose induced degree is
// zero cannot be part of a Graph and are returned in `isolated`; the rest
// are relabeled compactly, with vertex_map[local] = original. graph is
// empty when no induced edge survives.
struct InducedSubgraph {
  std::optional<Graph> graph;
  std::vector<int> vertex_map;
  std::vector<int> isolated;
};
InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> vertices);

}  // namespace siglap

#endif
