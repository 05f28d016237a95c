#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hyperspec/hypergraph.hpp"

namespace hyperspec {

/// A surgery whose preconditions do not hold. The message names the
/// offending edge or vertex.
class TransformError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by reduce() when some edge has no pendant vertex (or k == 2).
class NotReducibleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Moves each listed edge off one of its vertices onto u:
/// e_i -> (e_i \ {v_i}) + {u}.
struct MoveSpec {
  Vertex u = 0;
  std::vector<std::pair<Edge, Vertex>> pairs;  // (e_i, v_i)
};

/// Vertices that became isolated are dropped and labels compacted.
Hypergraph move_edges(const Hypergraph& g, const MoveSpec& spec);

/// Replaces disjoint edges e, f by U1 + (f \ V1) and V1 + (e \ U1).
Hypergraph swap_parts(const Hypergraph& g, const Edge& e, const Edge& u1, const Edge& f, const Edge& v1);

/// Hangs a pendant path of p edges at u. Fresh vertices are numbered from
/// n upward; consecutive path edges share the largest fresh vertex of the
/// previous edge. p == 0 returns g unchanged.
Hypergraph attach_path(const Hypergraph& g, Vertex u, std::size_t p);

/// Pendant path of length p at u, then one of length q at v.
Hypergraph attach_two_paths(const Hypergraph& g, Vertex u, Vertex v, std::size_t p, std::size_t q);

bool is_reducible(const Hypergraph& g);

enum class PendantChoice { largest, smallest };

/// Deletes one pendant vertex from every edge, giving a (k-1)-uniform
/// hypergraph with the same number of edges.
Hypergraph reduce(const Hypergraph& g, PendantChoice choice = PendantChoice::largest);

/// Adds r fresh pendant vertices to every edge. reduce() undoes one layer
/// of this when the fresh vertices carry the largest labels.
Hypergraph pad_edges(const Hypergraph& g, int r = 1);

}  // namespace hyperspec
