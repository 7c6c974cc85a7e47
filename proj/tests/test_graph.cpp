#include <gtest/gtest.h>

#include <random>
#include <string>

#include "oracles.hpp"
#include "wienerseq/constructions.hpp"
#include "wienerseq/enumeration.hpp"
#include "wienerseq/graph.hpp"
#include "wienerseq/sampling.hpp"

using namespace wienerseq;

namespace {

Graph from(std::size_t n, std::initializer_list<Edge> edges) {
  return Graph::from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
}

}  // namespace

TEST(Graph, InvariantsAndRejections) {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(2, 1);
  EXPECT_EQ(g.size(), 2u);
  EXPECT_TRUE(g.has_edge(1, 2));
  EXPECT_EQ(g.degree(1), 2u);
  EXPECT_THROW(g.add_edge(1, 1), DomainError);
  EXPECT_THROW(g.add_edge(0, 1), DomainError);
  EXPECT_THROW(g.add_edge(1, 0), DomainError);
  EXPECT_THROW(g.add_edge(0, 4), DomainError);
  std::size_t degree_sum = 0;
  for (Vertex v = 0; v < g.order(); ++v) degree_sum += g.degree(v);
  EXPECT_EQ(degree_sum, 2 * g.size());
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {1, 2}}));
}

TEST(Graph, DerivedGraphs) {
  const Graph p = path(4);
  const Graph q = p.without_vertex(1);  // 0 | 2-3  -> labels 0 | 1-2
  EXPECT_EQ(q.order(), 3u);
  EXPECT_EQ(q.edges(), (std::vector<Edge>{{1, 2}}));
  const std::vector<Vertex> targets{0, 3};
  const Graph c = p.with_new_vertex(targets);
  EXPECT_EQ(c.size(), 5u);
  EXPECT_TRUE(c.has_edge(4, 3));
  const std::vector<Vertex> perm{3, 2, 1, 0};
  EXPECT_EQ(p.relabeled(perm), p);
}

// ---------------------------------------------------------------------------
// graph6

TEST(Graph6, KnownRecordsDecodedByIndependentDecoder) {
  // networkx.from_graph6_bytes(b"D?{") gives the star centred at vertex 4.
  const Graph g = parse_graph6("D?{");
  EXPECT_EQ(g.order(), 5u);
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 4}, {1, 4}, {2, 4}, {3, 4}}));
  EXPECT_EQ(write_graph6(g), "D?{");

  const Graph k1 = parse_graph6("@");
  EXPECT_EQ(k1.order(), 1u);
  EXPECT_EQ(k1.size(), 0u);
  EXPECT_EQ(write_graph6(Graph(1)), "@");

  EXPECT_EQ(write_graph6(complete(3)), "Bw");
  EXPECT_EQ(parse_graph6("Bw"), complete(3));
}

TEST(Graph6, FixturesMatchIndependentEncoder) {
  // Encodings produced by networkx.to_graph6_bytes.
  EXPECT_EQ(write_graph6(complete(5)), "D~{");
  EXPECT_EQ(write_graph6(cycle(5)), "Dhc");
  EXPECT_EQ(write_graph6(path(4)), "Ch");
  EXPECT_EQ(write_graph6(Graph(2)), "A?");
  EXPECT_EQ(write_graph6(complete(2)), "A_");

  const Graph petersen = from(10, {{0, 1}, {0, 4}, {0, 5}, {1, 2}, {1, 6}, {2, 3}, {2, 7}, {3, 4},
                                   {3, 8}, {4, 9}, {5, 7}, {5, 8}, {6, 8}, {6, 9}, {7, 9}});
  EXPECT_EQ(write_graph6(petersen), "IheA@GUAo");

  // n >= 63 switches to the 4-byte header.
  const std::string path63 =
      "~??~hCGGC@?G?_@?@??_?G?@??C??G??G??C??@???G???_??@???@????_???G???@????C????G????G????C????@?????G?????_????@"
      "?????@??????_?????G?????@??????C??????G??????G??????C??????@???????G???????_??????@???????@????????_???????G??"
      "?????@????????C????????G????????G????????C????????@?????????G?????????_????????@?????????@??????????_?????????"
      "G";
  EXPECT_EQ(write_graph6(path(63)), path63);
  EXPECT_EQ(parse_graph6(path63), path(63));

  Graph star70 = star(70);
  const std::string s70 = write_graph6(star70);
  EXPECT_EQ(s70.substr(0, 12), "~?@EsaCCA?_C");
  EXPECT_EQ(parse_graph6(s70), star70);
}

TEST(Graph6, RejectsMalformedRecords) {
  EXPECT_THROW(parse_graph6(""), ParseError);
  EXPECT_THROW(parse_graph6("D?"), ParseError);           // payload too short
  EXPECT_THROW(parse_graph6("D?{?"), ParseError);         // payload too long
  EXPECT_THROW(parse_graph6("D?|"), ParseError);          // nonzero padding bits
  EXPECT_THROW(parse_graph6(std::string("D?\x7f", 3)), ParseError);  // outside 63..126
  EXPECT_THROW(parse_graph6("D? {"), ParseError);
  EXPECT_THROW(parse_graph6("~?"), ParseError);           // truncated long header
  EXPECT_THROW(parse_graph6("~??A"), ParseError);         // long header used for n < 63
  EXPECT_NO_THROW(parse_graph6("D?{\n"));
  EXPECT_EQ(parse_graph6(">>graph6<<Bw"), complete(3));
}

TEST(Graph6, RandomRoundTrips) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::size_t> order(1, 80);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const Graph g = random_graph(order(rng), density(rng), rng);
    const std::string s = write_graph6(g);
    ASSERT_EQ(parse_graph6(s), g) << s;
    ASSERT_EQ(write_graph6(parse_graph6(s)), s);
  }
}

// ---------------------------------------------------------------------------
// edge lists

TEST(EdgeList, ParsesAndRoundTrips) {
  const Graph g = parse_edge_list("# a path\n4\n0 1\n\n1 2  # middle\n2 3\n");
  EXPECT_EQ(g, path(4));
  EXPECT_EQ(parse_edge_list(write_edge_list(cycle(6))), cycle(6));
}

TEST(EdgeList, Errors) {
  EXPECT_THROW(parse_edge_list(""), ParseError);
  EXPECT_THROW(parse_edge_list("x\n"), ParseError);
  EXPECT_THROW(parse_edge_list("3\n0 3\n"), ParseError);
  EXPECT_THROW(parse_edge_list("3\n1 1\n"), ParseError);
  EXPECT_THROW(parse_edge_list("3\n0 1\n1 0\n"), ParseError);
  EXPECT_THROW(parse_edge_list("3\n0 1 2\n"), ParseError);
  EXPECT_THROW(parse_edge_list("3\n0\n"), ParseError);
}

// ---------------------------------------------------------------------------
// distances

TEST(Distances, MatchFloydWarshallOnAllConnectedGraphs) {
  for (std::size_t n = 2; n <= 7; ++n) {
    for (const auto& g : enumerate_connected(n)) {
      const auto dm = distance_matrix(g);
      const auto fw = oracle::floyd_warshall(g);
      for (Vertex u = 0; u < n; ++u) {
        std::uint32_t ecc = 0;
        for (Vertex v = 0; v < n; ++v) {
          ASSERT_EQ(dm(u, v), fw[u][v]);
          ASSERT_EQ(dm(u, v), dm(v, u));
          ASSERT_EQ(dm(u, v) == 1, g.has_edge(u, v));
          ecc = std::max(ecc, fw[u][v]);
          for (Vertex w = 0; w < n; ++w) ASSERT_LE(dm(u, w), dm(u, v) + dm(v, w));
        }
        ASSERT_EQ(dm.eccentricity(u), ecc);
      }
    }
  }
}

TEST(Distances, Cycle8) {
  const auto dm = distance_matrix(cycle(8));
  EXPECT_EQ(dm(0, 4), 4u);
  EXPECT_EQ(dm(1, 7), 2u);
  EXPECT_EQ(dm.diameter(), 4u);
  EXPECT_EQ(dm.eccentricity(3), 4u);
}

TEST(Distances, DisconnectedNamesPair) {
  const Graph g = from(4, {{0, 1}, {2, 3}});
  try {
    distance_matrix(g);
    FAIL() << "expected DisconnectedGraphError";
  } catch (const DisconnectedGraphError& e) {
    EXPECT_EQ(e.first(), 0u);
    EXPECT_EQ(e.second(), 2u);
  }
  EXPECT_FALSE(is_connected(g));
}

// ---------------------------------------------------------------------------
// structure

TEST(Structure, VertexConnectivityExamples) {
  EXPECT_EQ(vertex_connectivity(complete(5)), 4u);
  EXPECT_EQ(vertex_connectivity(cycle(6)), 2u);
  EXPECT_EQ(vertex_connectivity(path(5)), 1u);
  EXPECT_EQ(vertex_connectivity(star(6)), 1u);
  EXPECT_EQ(vertex_connectivity(cycle_power(8, 2)), 4u);
  EXPECT_EQ(vertex_connectivity(from(4, {{0, 1}, {2, 3}})), 0u);
  EXPECT_THROW(vertex_connectivity(Graph(1)), DomainError);
}

TEST(Structure, VertexConnectivityMatchesSubsetOracle) {
  for (std::size_t n = 2; n <= 6; ++n) {
    for (const auto& g : enumerate_connected(n)) ASSERT_EQ(vertex_connectivity(g), oracle::connectivity(g)) << write_graph6(g);
  }
}

TEST(Structure, CutVertices) {
  EXPECT_TRUE(is_cut_vertex(path(3), 1));
  EXPECT_FALSE(is_cut_vertex(path(3), 0));
  EXPECT_FALSE(is_cut_vertex(cycle(5), 2));
  EXPECT_TRUE(is_cut_vertex(star(5), 0));
}

TEST(Structure, Degeneracy) {
  const auto tree = degeneracy_check(path(6), 1);
  EXPECT_TRUE(tree.is_k_degenerate);
  EXPECT_TRUE(tree.is_maximal);
  const auto c = degeneracy_check(cycle(5), 1);
  EXPECT_FALSE(c.is_k_degenerate);
  const auto c2 = degeneracy_check(cycle(5), 2);
  EXPECT_TRUE(c2.is_k_degenerate);
  EXPECT_FALSE(c2.is_maximal);
  const auto pp = degeneracy_check(path_power(7, 3), 3);
  EXPECT_TRUE(pp.is_k_degenerate && pp.is_maximal);
  const auto forest = degeneracy_check(from(4, {{0, 1}}), 1);
  EXPECT_TRUE(forest.is_k_degenerate);
  EXPECT_FALSE(forest.is_maximal);
  EXPECT_THROW(degeneracy_check(path(3), 0), DomainError);
}

TEST(Structure, TreesAndOddTrees) {
  EXPECT_TRUE(is_tree(path(5)));
  EXPECT_FALSE(is_tree(cycle(5)));
  EXPECT_TRUE(is_odd_tree(star(4)));
  EXPECT_FALSE(is_odd_tree(path(4)));
  EXPECT_TRUE(is_odd_tree(odd_caterpillar(10)));
}

TEST(Structure, GraphPower) {
  EXPECT_EQ(graph_power(path(5), 1), path(5));
  EXPECT_EQ(graph_power(path(5), 4), complete(5));
  EXPECT_EQ(graph_power(cycle(6), 3), complete(6));
  const Graph p2 = graph_power(path(5), 2);
  EXPECT_EQ(p2.size(), 7u);
  EXPECT_TRUE(p2.has_edge(0, 2));
  EXPECT_FALSE(p2.has_edge(0, 3));
  EXPECT_THROW(graph_power(path(3), 0), DomainError);
  EXPECT_THROW(graph_power(from(3, {{0, 1}}), 2), Error);
}
