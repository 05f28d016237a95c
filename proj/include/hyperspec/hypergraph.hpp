#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hyperspec {

using Vertex = std::uint32_t;
using Edge = std::vector<Vertex>;

/// Raised for malformed `.hg` input and for edge lists that violate the
/// uniform-hypergraph invariants.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an operation needs a connected hypergraph.
class DisconnectedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an exhaustive search would exceed the configured vertex cap.
class CapExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A k-uniform hypergraph on vertices 0..n-1.
///
/// Instances are always normalized: every edge is a strictly ascending list
/// of k vertices, the edge list is sorted lexicographically with no
/// duplicates, and every vertex lies in at least one edge. Two hypergraphs
/// compare equal iff their normalized edge lists are identical.
class Hypergraph {
 public:
  /// Builds a hypergraph from arbitrary vertex labels. Labels are compacted
  /// order-preservingly onto 0..n-1, so unused labels simply disappear.
  static Hypergraph from_edges(int k, std::vector<Edge> edges);

  /// Builds a hypergraph on exactly n vertices. Unlike from_edges this
  /// rejects out-of-range labels and isolated vertices.
  static Hypergraph with_vertex_count(int k, std::size_t n, std::vector<Edge> edges);

  int k() const { return k_; }
  std::size_t n() const { return n_; }
  std::size_t m() const { return flat_.size() / static_cast<std::size_t>(k_); }

  std::span<const Vertex> edge(std::size_t i) const {
    return {flat_.data() + i * static_cast<std::size_t>(k_), static_cast<std::size_t>(k_)};
  }
  /// All edges, concatenated with stride k.
  std::span<const Vertex> flat() const { return flat_; }
  std::vector<Edge> edges() const;

  bool has_edge(std::span<const Vertex> sorted_edge) const;
  /// Index of a (sorted) edge, or m() if absent.
  std::size_t find_edge(std::span<const Vertex> sorted_edge) const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  Hypergraph(int k, std::size_t n, std::vector<Vertex> flat)
      : k_(k), n_(n), flat_(std::move(flat)) {}

  int k_ = 0;
  std::size_t n_ = 0;
  std::vector<Vertex> flat_;
};

/// Parses the `.hg` text format: a `k n m` header followed by m lines of k
/// vertex indices.
Hypergraph parse(std::string_view text);
Hypergraph read_file(const std::string& path);

/// Normalized `.hg` text, newline-terminated.
std::string serialize(const Hypergraph& g);
void write_file(const Hypergraph& g, const std::string& path);

bool is_connected(const Hypergraph& g);
std::vector<std::size_t> degrees(const Hypergraph& g);

/// Vertex -> incident edge indices, as CSR offsets/indices.
struct Incidence {
  std::vector<std::size_t> offsets;
  std::vector<std::size_t> edges;

  std::span<const std::size_t> of(Vertex v) const {
    return {edges.data() + offsets[v], offsets[v + 1] - offsets[v]};
  }
};
Incidence incidence(const Hypergraph& g);

/// Relabels vertex v to perm[v]; perm must be a permutation of 0..n-1.
Hypergraph relabel(const Hypergraph& g, std::span<const Vertex> perm);

}  // namespace hyperspec
