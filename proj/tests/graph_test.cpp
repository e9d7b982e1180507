#include "siglap/graph.hpp"

#include <gtest/gtest.h>

#include <sstream>

#include "siglap/errors.hpp"
#include "support/test_graphs.hpp"

namespace siglap {
namespace {

TEST(Graph, BasicAccessors) {
  auto g = Graph::from_edges(3, {{0, 1, 2.0}, {2, 1, 0.5}});
  EXPECT_EQ(g.vertex_count(), 3);
  EXPECT_EQ(g.edge_count(), 2);
  EXPECT_DOUBLE_EQ(g.degree(0), 2.0);
  EXPECT_DOUBLE_EQ(g.degree(1), 2.5);
  EXPECT_DOUBLE_EQ(g.degree(2), 0.5);
  EXPECT_DOUBLE_EQ(g.total_volume(), 5.0);
  EXPECT_DOUBLE_EQ(g.total_edge_weight(), 2.5);
  // Endpoints are normalized to u < v.
  EXPECT_EQ(g.edges()[1].u, 1);
  EXPECT_EQ(g.edges()[1].v, 2);
}

TEST(Graph, NeighborsAreComplete) {
  auto g = testing::complete(4);
  for (int v = 0; v < 4; ++v) {
    auto inc = g.neighbors(v);
    EXPECT_EQ(inc.size(), 3u);
    double sum = 0.0;
    for (auto& e : inc) {
      EXPECT_NE(e.neighbor, v);
      sum += e.weight;
    }
    EXPECT_DOUBLE_EQ(sum, g.degree(v));
  }
}

TEST(Graph, RejectsBadInput) {
  EXPECT_THROW(Graph::from_edges(0, {}), DomainError);
  EXPECT_THROW(Graph::from_edges(2, {{0, 0, 1.0}}), DomainError);
  EXPECT_THROW(Graph::from_edges(2, {{0, 1, 0.0}}), DomainError);
  EXPECT_THROW(Graph::from_edges(2, {{0, 1, -1.0}}), DomainError);
  EXPECT_THROW(Graph::from_edges(2, {{0, 2, 1.0}}), DomainError);
  // Duplicates in either orientation.
  EXPECT_THROW(Graph::from_edges(2, {{0, 1, 1.0}, {1, 0, 2.0}}), DomainError);
  // Vertex 2 isolated.
  EXPECT_THROW(Graph::from_edges(3, {{0, 1, 1.0}}), DomainError);
}

TEST(Graph, ConnectivityAndBipartiteness) {
  EXPECT_TRUE(testing::path(5).is_connected());
  EXPECT_TRUE(testing::path(5).is_bipartite());
  EXPECT_TRUE(testing::cycle(6).is_bipartite());
  EXPECT_FALSE(testing::cycle(5).is_bipartite());
  EXPECT_FALSE(testing::petersen().is_bipartite());
  EXPECT_TRUE(testing::petersen().is_connected());
  auto disjoint = testing::two_triangles();
  EXPECT_FALSE(disjoint.is_connected());
  EXPECT_FALSE(disjoint.is_bipartite());
}

TEST(SetPair, MakeSortsAndValidates) {
  auto g = testing::complete(4);
  auto p = make_set_pair(g, {3, 1}, {2});
  EXPECT_EQ(p.a, (std::vector<int>{1, 3}));
  EXPECT_EQ(p.b, (std::vector<int>{2}));
  EXPECT_THROW(make_set_pair(g, {0}, {0}), DomainError);
  EXPECT_THROW(make_set_pair(g, {}, {}), DomainError);
  EXPECT_THROW(make_set_pair(g, {0, 0}, {1}), DomainError);
  EXPECT_THROW(make_set_pair(g, {4}, {1}), DomainError);
}

TEST(SetPair, VolumeAndCut) {
  auto g = testing::complete(4);
  std::vector<int> a{0, 1}, b{2, 3};
  EXPECT_DOUBLE_EQ(volume(g, a), 6.0);
  EXPECT_DOUBLE_EQ(cut_weight(g, a, b), 4.0);
  std::vector<int> a2{0}, b2{3};
  EXPECT_DOUBLE_EQ(cut_weight(g, a2, b2), 1.0);
}

TEST(Gset, ParsesWeightedFile) {
  auto g = parse_gset_text("3 3\n1 2 1\n1 3 2.5\n2 3 0.5\n");
  EXPECT_EQ(g.vertex_count(), 3);
  EXPECT_EQ(g.edge_count(), 3);
  EXPECT_DOUBLE_EQ(g.degree(0), 3.5);
}

TEST(Gset, SkipsBlankLines) {
  auto g = parse_gset_text("\n2 1\n\n1 2 1\n\n");
  EXPECT_EQ(g.edge_count(), 1);
}

TEST(Gset, RoundTripsExactly) {
  auto g = testing::er_connected(7, 0.6, 11, true);
  auto h = parse_gset_text(to_gset(g));
  ASSERT_EQ(h.vertex_count(), g.vertex_count());
  ASSERT_EQ(h.edge_count(), g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    EXPECT_EQ(h.edges()[static_cast<size_t>(e)].u,
              g.edges()[static_cast<size_t>(e)].u);
    EXPECT_EQ(h.edges()[static_cast<size_t>(e)].v,
              g.edges()[static_cast<size_t>(e)].v);
    EXPECT_EQ(h.edges()[static_cast<size_t>(e)].w,
              g.edges()[static_cast<size_t>(e)].w);
  }
}

TEST(Gset, SerializesOneBased) {
  auto text = to_gset(testing::single_edge());
  std::istringstream in(text);
  int n = 0, m = 0, u = 0, v = 0;
  double w = 0.0;
  in >> n >> m >> u >> v >> w;
  EXPECT_EQ(n, 2);
  EXPECT_EQ(m, 1);
  EXPECT_EQ(u, 1);
  EXPECT_EQ(v, 2);
  EXPECT_DOUBLE_EQ(w, 1.0);
}

TEST(Gset, ParseErrorsCarryLineNumbers) {
  try {
    parse_gset_text("2 1\n1 2 1 7\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
  EXPECT_THROW(parse_gset_text(""), ParseError);
  EXPECT_THROW(parse_gset_text("junk\n"), ParseError);
  EXPECT_THROW(parse_gset_text("2\n"), ParseError);
  EXPECT_THROW(parse_gset_text("2 2\n1 2 1\n"), ParseError);     // too few
  EXPECT_THROW(parse_gset_text("2 0\n1 2 1\n"), ParseError);     // too many
  EXPECT_THROW(parse_gset_text("2 1\n1 2\n"), ParseError);       // no weight
  EXPECT_THROW(parse_gset_text("2 1\n1 3 1\n"), ParseError);     // range
  EXPECT_THROW(parse_gset_text("2 1\n0 1 1\n"), ParseError);     // 1-based
}

TEST(Gset, DomainErrorsForBadEdges) {
  EXPECT_THROW(parse_gset_text("2 1\n1 1 1\n"), DomainError);
  EXPECT_THROW(parse_gset_text("2 1\n1 2 0\n"), DomainError);
  EXPECT_THROW(parse_gset_text("2 1\n1 2 -3\n"), DomainError);
  try {
    parse_gset_text("2 1\n1 2 -3\n");
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("nonpositive weight"),
              std::string::npos);
  }
}

TEST(InducedSubgraph, CompactsLabels) {
  auto g = testing::complete(4);
  std::vector<int> keep{0, 2, 3};
  auto sub = induced_subgraph(g, keep);
  ASSERT_TRUE(sub.graph.has_value());
  EXPECT_EQ(sub.graph->vertex_count(), 3);
  EXPECT_EQ(sub.graph->edge_count(), 3);
  EXPECT_TRUE(sub.isolated.empty());
  // vertex_map sends compact labels back to the original ones.
  EXPECT_EQ(sub.vertex_map, keep);
}

TEST(InducedSubgraph, SeparatesIsolatedVertices) {
  auto g = testing::path(4);  // 0-1-2-3
  std::vector<int> keep{0, 2, 3};
  auto sub = induced_subgraph(g, keep);
  ASSERT_TRUE(sub.graph.has_value());
  EXPECT_EQ(sub.graph->vertex_count(), 2);  // {2,3} keep their edge
  EXPECT_EQ(sub.isolated, (std::vector<int>{0}));
  EXPECT_EQ(sub.vertex_map, (std::vector<int>{2, 3}));
}

TEST(InducedSubgraph, AllIsolated) {
  auto g = testing::path(4);
  std::vector<int> keep{0, 2};
  auto sub = induced_subgraph(g, keep);
  EXPECT_FALSE(sub.graph.has_value());
  EXPECT_EQ(sub.isolated, (std::vector<int>{0, 2}));
}

}  // namespace
}  // namespace siglap
