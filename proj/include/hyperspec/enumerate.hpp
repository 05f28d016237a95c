#pragma once

#include <cstddef>
#include <vector>

#include "hyperspec/canonical.hpp"
#include "hyperspec/hypergraph.hpp"
#include "hyperspec/spectral.hpp"

namespace hyperspec {

enum class Execution { serial, parallel };

struct EnumerateOptions {
  std::size_t max_n = kDefaultMaxVertices;
  Execution execution = Execution::parallel;
};

/// One representative (the canonical relabeling) per isomorphism class of
/// connected k-uniform hypergraphs with m edges, ordered by canonical form.
///
/// Classes with m edges are grown from the classes with m-1 edges by adding
/// one edge that meets at least one existing vertex and brings in the rest
/// as fresh vertices; duplicates are removed by canonical form. Throws
/// CapExceededError when (k-1)m+1 > max_n, since a loose path needs that
/// many vertices.
std::vector<Hypergraph> enumerate_connected(int k, int m, const EnumerateOptions& opts = {});

struct RankedClass {
  CanonicalForm canonical;
  Hypergraph graph;
  EigenResult eigen;
  /// Bound interval overlaps the next class's interval.
  bool tied_with_next = false;
};

struct RankingReport {
  int k = 0;
  int m = 0;
  std::vector<RankedClass> classes;  // ascending by lower bound
  std::size_t total_count = 0;

  /// The first class is strictly below every other class.
  bool minimum_certified() const;
  /// The first two classes are strictly separated from each other and from
  /// the rest.
  bool second_certified() const;
};

struct RankOptions {
  SpectralOptions spectral;
  EnumerateOptions enumeration;
};

RankingReport rank_by_rho(int k, int m, const RankOptions& opts = {});

}  // namespace hyperspec
