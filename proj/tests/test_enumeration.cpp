#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "oracles.hpp"
#include "wienerseq/canonical.hpp"
#include "wienerseq/constructions.hpp"
#include "wienerseq/enumeration.hpp"
#include "wienerseq/sampling.hpp"

using namespace wienerseq;

namespace {

std::set<std::string> certificates(const std::vector<Graph>& graphs) {
  std::set<std::string> out;
  for (const auto& g : graphs) out.insert(canonical_form(g).certificate);
  return out;
}

std::vector<std::string> graph6_lines(const std::vector<Graph>& graphs) {
  std::vector<std::string> out;
  for (const auto& g : graphs) out.push_back(write_graph6(g));
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// canonical form

TEST(Canonical, InvariantUnderRelabeling) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 500; ++i) {
    const Graph g = random_graph(1 + i % 20, 0.4, rng);
    const Graph h = g.relabeled(random_permutation(g.order(), rng));
    ASSERT_EQ(canonical_form(g), canonical_form(h)) << write_graph6(g);
    ASSERT_TRUE(isomorphic(g, h));
    ASSERT_EQ(canonical_graph(g), canonical_graph(h));
  }
}

TEST(Canonical, RegularGraphs) {
  // Highly symmetric inputs stress the individualization search.
  std::mt19937_64 rng(1);
  for (const Graph& g : {cycle(12), complete(9), cycle_power(16, 3), Graph(10)}) {
    ASSERT_EQ(canonical_form(g), canonical_form(g.relabeled(random_permutation(g.order(), rng))));
  }
  EXPECT_FALSE(isomorphic(cycle(6), graph_power(cycle(6), 1).with_edge(0, 3)));
}

TEST(Canonical, AgreesWithBruteForceOnAllLabeledGraphsUpTo6) {
  for (std::size_t n = 1; n <= 6; ++n) {
    // Partition all connected labeled graphs by both certificates; the two
    // partitions must coincide.
    std::map<std::string, std::string> ours_to_brute;
    std::map<std::string, std::string> brute_to_ours;
    for (const auto& g : oracle::all_connected_labeled(n)) {
      const auto ours = canonical_form(g).certificate;
      const auto brute = oracle::brute_canonical(g);
      auto [a, fresh_a] = ours_to_brute.emplace(ours, brute);
      auto [b, fresh_b] = brute_to_ours.emplace(brute, ours);
      ASSERT_EQ(a->second, brute);
      ASSERT_EQ(b->second, ours);
    }
    ASSERT_EQ(ours_to_brute.size(), brute_to_ours.size());
  }
}

TEST(Canonical, ClassesAtSevenArePairwiseNonIsomorphic) {
  const auto graphs = enumerate_connected(7);
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    for (std::size_t j = i + 1; j < graphs.size(); ++j) {
      ASSERT_FALSE(oracle::brute_isomorphic(graphs[i], graphs[j])) << write_graph6(graphs[i]) << " " << write_graph6(graphs[j]);
    }
  }
}

// ---------------------------------------------------------------------------
// counts. Reference values are the standard tables of unlabeled graph
// counts; orders <= 6 are also re-derived below by brute force.

TEST(Enumeration, ConnectedCounts) {
  const std::size_t expected[] = {0, 0, 1, 2, 6, 21, 112, 853};
  for (std::size_t n = 2; n <= 7; ++n) EXPECT_EQ(enumerate_connected(n).size(), expected[n]) << n;
}

TEST(Enumeration, ConnectedCountsMatchBruteForce) {
  for (std::size_t n = 2; n <= 6; ++n) {
    std::set<std::string> classes;
    for (const auto& g : oracle::all_connected_labeled(n)) classes.insert(oracle::brute_canonical(g));
    std::set<std::string> ours;
    for (const auto& g : enumerate_connected(n)) ours.insert(oracle::brute_canonical(g));
    EXPECT_EQ(ours, classes) << n;
  }
}

TEST(Enumeration, LabeledAndSizeFilter) {
  EXPECT_EQ(enumerate_connected(4, std::nullopt, Dedup::Labeled).size(), 38u);
  EXPECT_EQ(enumerate_connected(5, std::nullopt, Dedup::Labeled).size(), 728u);
  EXPECT_EQ(enumerate_connected(5, 4).size(), 3u);  // trees on 5 vertices
  EXPECT_EQ(enumerate_connected(5, 10).size(), 1u);
  EXPECT_THROW(enumerate_connected(9), DomainError);
  EXPECT_THROW(enumerate_connected(8, std::nullopt, Dedup::Labeled), DomainError);
  EXPECT_THROW(enumerate_connected(1), DomainError);
}

TEST(Enumeration, KConnected) {
  EXPECT_EQ(enumerate_k_connected(5, 2).size(), 10u);
  EXPECT_EQ(enumerate_k_connected(6, 2).size(), 56u);
  EXPECT_EQ(enumerate_k_connected(7, 2).size(), 468u);
  // Survives deletion of any kappa-1 vertices.
  for (const auto& g : enumerate_k_connected(7, 3)) {
    ASSERT_GE(oracle::connectivity(g), 3u);
    for (Vertex a = 0; a < 7; ++a) {
      for (Vertex b = a + 1; b < 7; ++b) ASSERT_TRUE(is_connected(g.without_vertex(b).without_vertex(a)));
    }
  }
}

TEST(Enumeration, KTrees) {
  const std::size_t trees[] = {0, 0, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159};
  for (std::size_t n = 2; n <= 14; ++n) EXPECT_EQ(enumerate_k_trees(n, 1).size(), trees[n]) << n;
  const std::size_t two_trees[] = {0, 0, 0, 1, 1, 2, 5, 12, 39, 136, 529};
  for (std::size_t n = 3; n <= 10; ++n) EXPECT_EQ(enumerate_k_trees(n, 2).size(), two_trees[n]) << n;
  const std::size_t three_trees[] = {0, 0, 0, 0, 1, 1, 2, 5, 15, 58, 275};
  for (std::size_t n = 4; n <= 10; ++n) EXPECT_EQ(enumerate_k_trees(n, 3).size(), three_trees[n]) << n;
  for (const auto& g : enumerate_k_trees(9, 2)) {
    ASSERT_EQ(g.size(), 2 * 9 - 3);
    const auto d = degeneracy_check(g, 2);
    ASSERT_TRUE(d.is_k_degenerate && d.is_maximal);
  }
  EXPECT_THROW(enumerate_k_trees(11, 2), DomainError);
  EXPECT_THROW(enumerate_k_trees(3, 3), DomainError);
}

TEST(Enumeration, KTreesAreMaximalKDegenerate) {
  for (std::size_t k = 1; k <= 3; ++k) {
    for (std::size_t n = k + 1; n <= 7; ++n) {
      const auto trees = certificates(enumerate_k_trees(n, k));
      const auto degenerate = certificates(enumerate_maximal_k_degenerate(n, k));
      for (const auto& c : trees) ASSERT_TRUE(degenerate.contains(c)) << n << "," << k;
    }
  }
}

TEST(Enumeration, MaximalKDegenerateAgainstFilterOracle) {
  for (std::size_t k = 1; k <= 3; ++k) {
    for (std::size_t n = k + 1; n <= 6; ++n) {
      std::set<std::string> expected;
      for (const auto& g : oracle::all_connected_labeled(n)) {
        const auto d = degeneracy_check(g, k);
        if (d.is_k_degenerate && d.is_maximal) expected.insert(oracle::brute_canonical(g));
      }
      std::set<std::string> ours;
      for (const auto& g : enumerate_maximal_k_degenerate(n, k)) ours.insert(oracle::brute_canonical(g));
      ASSERT_EQ(ours, expected) << n << "," << k;
    }
  }
}

TEST(Enumeration, OddTrees) {
  EXPECT_EQ(certificates(enumerate_odd_trees(4)), certificates({star(4)}));
  EXPECT_EQ(certificates(enumerate_odd_trees(6)), certificates({star(6), odd_caterpillar(6)}));
  const std::size_t expected[] = {0, 0, 0, 0, 1, 0, 2, 0, 3, 0, 7, 0, 13, 0, 32};
  for (std::size_t n = 4; n <= 14; n += 2) {
    const auto trees = enumerate_odd_trees(n);
    EXPECT_EQ(trees.size(), expected[n]);
    for (const auto& t : trees) ASSERT_TRUE(is_odd_tree(t));
  }
  try {
    enumerate_odd_trees(7);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("odd trees have even order"), std::string::npos);
  }
}

TEST(Enumeration, Apollonian) {
  EXPECT_EQ(certificates(enumerate_apollonian(3)), certificates({complete(3)}));
  EXPECT_EQ(certificates(enumerate_apollonian(4)), certificates({complete(4)}));
  const std::size_t expected[] = {0, 0, 0, 1, 1, 1, 1, 3, 7, 24, 93, 434};
  for (std::size_t n = 3; n <= 11; ++n) EXPECT_EQ(enumerate_apollonian(n).size(), expected[n]) << n;
  for (std::size_t n = 4; n <= 10; ++n) {
    const auto three_trees = certificates(enumerate_k_trees(n, 3));
    for (const auto& c : certificates(enumerate_apollonian(n))) ASSERT_TRUE(three_trees.contains(c));
  }
}

TEST(Enumeration, MaximalPlanar) {
  const std::size_t expected[] = {0, 0, 0, 0, 1, 1, 2, 5, 14, 50};
  for (std::size_t n = 4; n <= 9; ++n) {
    const auto p = enumerate_maximal_planar(n);
    EXPECT_EQ(p.graphs.size(), expected[n]) << n;
    EXPECT_EQ(p.coverage, Coverage::Complete);
    const auto all = certificates(p.graphs);
    for (const auto& g : p.graphs) ASSERT_EQ(g.size(), 3 * n - 6);
    for (const auto& c : certificates(enumerate_apollonian(n))) ASSERT_TRUE(all.contains(c));
  }
  const auto partial = enumerate_maximal_planar(8, PlanarMode::ApollonianOnly);
  EXPECT_EQ(partial.coverage, Coverage::Partial);
  EXPECT_EQ(partial.graphs.size(), 7u);
  EXPECT_THROW(enumerate_maximal_planar(10), DomainError);
}

TEST(Enumeration, DeterministicAcrossShards) {
  const ShardOptions one{1, 1};
  const ShardOptions eight{8, 8};
  const ShardOptions odd{3, 2};
  EXPECT_EQ(graph6_lines(enumerate_connected(7, std::nullopt, Dedup::Unlabeled, one)),
            graph6_lines(enumerate_connected(7, std::nullopt, Dedup::Unlabeled, eight)));
  EXPECT_EQ(graph6_lines(enumerate_k_trees(9, 2, one)), graph6_lines(enumerate_k_trees(9, 2, odd)));
  EXPECT_EQ(graph6_lines(enumerate_maximal_planar(9, PlanarMode::FlipClosure, one).graphs),
            graph6_lines(enumerate_maximal_planar(9, PlanarMode::FlipClosure, eight).graphs));
  EXPECT_EQ(graph6_lines(enumerate_odd_trees(12, one)), graph6_lines(enumerate_odd_trees(12, eight)));
}

TEST(Enumeration, ClassSpecs) {
  const auto spec = parse_class("connected:6,7");
  EXPECT_EQ(spec.graph_class, GraphClass::Connected);
  EXPECT_EQ(spec.n, 6u);
  EXPECT_EQ(spec.param, 7u);
  EXPECT_EQ(to_string(spec), "connected:6,7");
  EXPECT_EQ(enumerate(parse_class("odd_tree:6")).graphs.size(), 2u);
  auto limited = parse_class("connected:6");
  limited.limit = 5;
  EXPECT_EQ(enumerate(limited).graphs.size(), 5u);
  auto labeled_trees = parse_class("k_tree:5,1");
  labeled_trees.dedup = Dedup::Labeled;
  EXPECT_THROW(enumerate(labeled_trees), DomainError);
  EXPECT_THROW(parse_class("k_tree:5"), ParseError);
  EXPECT_THROW(parse_class("widgets:5"), ParseError);
  EXPECT_THROW(parse_class("connected:"), ParseError);
}
