#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "hyperspec/hypergraph.hpp"

namespace hyperspec {

inline constexpr std::size_t kDefaultMaxVertices = 16;

/// Lexicographically minimal edge list over the relabelings explored by an
/// exact individualization/refinement search. Equal forms mean isomorphic
/// hypergraphs and vice versa.
struct CanonicalForm {
  int k = 0;
  std::size_t n = 0;
  std::vector<Vertex> flat;  // m*k vertex labels, edges sorted

  std::size_t m() const { return k ? flat.size() / static_cast<std::size_t>(k) : 0; }

  /// Deterministic text encoding, e.g. "3 5 2|0 1 2,2 3 4".
  std::string bytes() const;
  Hypergraph to_hypergraph() const;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

/// Throws CapExceededError if g has more than max_n vertices.
CanonicalForm canonical_form(const Hypergraph& g, std::size_t max_n = kDefaultMaxVertices);

bool is_isomorphic(const Hypergraph& g, const Hypergraph& h, std::size_t max_n = kDefaultMaxVertices);

}  // namespace hyperspec
