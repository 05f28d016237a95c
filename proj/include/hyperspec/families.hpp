#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyperspec/hypergraph.hpp"

namespace hyperspec {

// Generators label vertices spine first, then legs in argument order, so the
// output of each generator is byte-reproducible.

/// k-uniform loose path with m edges; edge i is {i(k-1), ..., i(k-1)+k-1}.
Hypergraph loose_path(int k, int m);
/// m >= 3 edges in a ring, consecutive edges sharing one vertex.
Hypergraph loose_cycle(int k, int m);
/// Loose path with m-1 edges plus a pendant edge at the first shared vertex.
Hypergraph d_family(int k, int m);
/// Loose path with m-1 edges plus a pendant edge at a degree-1 vertex of
/// the second edge (the smallest such label). Needs k >= 3.
Hypergraph d_prime_family(int k, int m);
/// 3-uniform: pendant paths of lengths i, j, l at one common vertex.
Hypergraph e3_family(int i, int j, int l);
/// 3-uniform: pendant paths of lengths i, j, l at the three vertices of one
/// edge. Zero-length legs are allowed.
Hypergraph f3_family(int i, int j, int l);
/// 3-uniform: loose path of length l+2, with pendant paths i, j at the two
/// pendant vertices of its first edge and p, q at those of its last edge.
Hypergraph g3_family(int i, int j, int l, int p, int q);
/// 4-uniform H_{1,1,1,t}: a central edge {u1,v1,v2,u2} with a pendant edge
/// at each of u1, v1, v2 and a pendant path of length t at u2. t in 1..4.
Hypergraph h4_family(int t);
/// Two k-edges sharing exactly a vertices.
Hypergraph two_edge_overlap(int k, int a);

enum class Family { P, C, D, Dprime, E3, F3, G3, H4, TwoEdge };

/// Family name plus integer parameters, e.g. "Dp:3,4" or "G3:1,1,0,1,3".
struct FamilySpec {
  Family family = Family::P;
  std::vector<int> params;

  std::string to_string() const;
  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// Throws std::invalid_argument on unknown names or wrong arity.
FamilySpec parse_family(std::string_view text);
/// Throws std::invalid_argument when parameters are out of range.
Hypergraph expand(const FamilySpec& spec);

/// Names g as one of the extremal families of its (k, m), if it is
/// isomorphic to P, D, D', TE or C. Used to label enumeration summaries.
std::optional<std::string> identify(const Hypergraph& g);

}  // namespace hyperspec
