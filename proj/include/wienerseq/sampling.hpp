#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <random>
#include <vector>

#include "wienerseq/graph.hpp"

namespace wienerseq {

/// Random labeled graph: each pair is an edge with probability p.
template <class Rng>
Graph random_graph(std::size_t n, double p, Rng& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

/// Random connected graph: a random recursive tree on shuffled labels plus
/// every remaining pair with probability p.
template <class Rng>
Graph random_connected_graph(std::size_t n, double p, Rng& rng) {
  std::vector<Vertex> labels(n);
  std::iota(labels.begin(), labels.end(), Vertex{0});
  std::shuffle(labels.begin(), labels.end(), rng);
  Graph g(n);
  for (std::size_t i = 1; i < n; ++i) {
    std::uniform_int_distribution<std::size_t> pick(0, i - 1);
    g.add_edge(labels[i], labels[pick(rng)]);
  }
  std::bernoulli_distribution coin(p);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!g.has_edge(u, v) && coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

template <class Rng>
std::vector<Vertex> random_permutation(std::size_t n, Rng& rng) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

}  // namespace wienerseq
