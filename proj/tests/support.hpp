#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "hyperspec/hypergraph.hpp"

namespace hyperspec::testing {

inline std::vector<Vertex> random_permutation(std::size_t n, std::mt19937& rng) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

// Connected k-uniform hypergraph grown edge by edge: each new edge keeps at
// least one old vertex and draws the rest from old or fresh vertices.
inline Hypergraph random_connected(int k, int m, std::mt19937& rng, double fresh_bias = 0.5) {
  std::vector<Edge> edges;
  Edge first(k);
  std::iota(first.begin(), first.end(), Vertex{0});
  edges.push_back(first);
  Vertex n = static_cast<Vertex>(k);
  std::bernoulli_distribution fresh(fresh_bias);
  while (static_cast<int>(edges.size()) < m) {
    Edge e{std::uniform_int_distribution<Vertex>(0, n - 1)(rng)};
    Vertex next = n;
    while (static_cast<int>(e.size()) < k) {
      Vertex v = fresh(rng) ? next : std::uniform_int_distribution<Vertex>(0, n - 1)(rng);
      if (std::find(e.begin(), e.end(), v) != e.end()) continue;
      if (v == next) ++next;
      e.push_back(v);
    }
    std::sort(e.begin(), e.end());
    if (std::find(edges.begin(), edges.end(), e) != edges.end()) continue;
    edges.push_back(e);
    n = next;
  }
  return Hypergraph::from_edges(k, std::move(edges));
}

}  // namespace hyperspec::testing
