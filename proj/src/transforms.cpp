#include "hyperspec/transforms.hpp"

#include <algorithm>
#include <string>

namespace hyperspec {
namespace {

std::string show(const Edge& e) {
  std::string s = "{";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(e[i]);
  }
  return s + "}";
}

Edge sorted(Edge e) {
  std::sort(e.begin(), e.end());
  return e;
}

bool contains(const Edge& e, Vertex v) { return std::find(e.begin(), e.end(), v) != e.end(); }

std::size_t require_edge(const Hypergraph& g, const Edge& e) {
  auto s = sorted(e);
  auto idx = g.find_edge(s);
  if (idx == g.m()) throw TransformError("edge " + show(s) + " is not in the hypergraph");
  return idx;
}

}  // namespace

Hypergraph move_edges(const Hypergraph& g, const MoveSpec& spec) {
  if (spec.pairs.empty()) throw TransformError("move needs at least one edge");
  if (spec.u >= g.n()) throw TransformError("target vertex " + std::to_string(spec.u) + " out of range");
  auto edges = g.edges();
  std::vector<std::size_t> removed;
  std::vector<Edge> added;
  for (const auto& [edge, v] : spec.pairs) {
    const auto e = sorted(edge);
    const auto idx = require_edge(g, e);
    if (std::find(removed.begin(), removed.end(), idx) != removed.end()) {
      throw TransformError("edge " + show(e) + " listed twice");
    }
    if (!contains(e, v)) throw TransformError("vertex " + std::to_string(v) + " is not in edge " + show(e));
    if (contains(e, spec.u)) {
      throw TransformError("target vertex " + std::to_string(spec.u) + " already lies in edge " + show(e));
    }
    Edge moved = e;
    *std::find(moved.begin(), moved.end(), v) = spec.u;
    moved = sorted(moved);
    if (g.has_edge(moved)) throw TransformError("moved edge " + show(moved) + " already exists");
    if (std::find(added.begin(), added.end(), moved) != added.end()) {
      throw TransformError("moved edge " + show(moved) + " produced twice");
    }
    removed.push_back(idx);
    added.push_back(std::move(moved));
  }
  std::vector<Edge> out;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (std::find(removed.begin(), removed.end(), i) == removed.end()) out.push_back(std::move(edges[i]));
  }
  out.insert(out.end(), added.begin(), added.end());
  return Hypergraph::from_edges(g.k(), std::move(out));
}

Hypergraph swap_parts(const Hypergraph& g, const Edge& e, const Edge& u1, const Edge& f, const Edge& v1) {
  const auto se = sorted(e), sf = sorted(f);
  const auto ie = require_edge(g, se);
  const auto jf = require_edge(g, sf);
  for (Vertex v : se) {
    if (contains(sf, v)) throw TransformError("edges " + show(se) + " and " + show(sf) + " overlap");
  }
  if (u1.size() != v1.size()) throw TransformError("parts must have equal size");
  if (u1.empty() || u1.size() >= static_cast<std::size_t>(g.k())) {
    throw TransformError("part size must lie in 1..k-1");
  }
  for (Vertex v : u1) {
    if (!contains(se, v)) throw TransformError("vertex " + std::to_string(v) + " is not in " + show(se));
  }
  for (Vertex v : v1) {
    if (!contains(sf, v)) throw TransformError("vertex " + std::to_string(v) + " is not in " + show(sf));
  }
  Edge e2 = u1, f2 = v1;
  for (Vertex v : sf) {
    if (!contains(v1, v)) e2.push_back(v);
  }
  for (Vertex v : se) {
    if (!contains(u1, v)) f2.push_back(v);
  }
  e2 = sorted(e2);
  f2 = sorted(f2);
  if (std::adjacent_find(e2.begin(), e2.end()) != e2.end() || std::adjacent_find(f2.begin(), f2.end()) != f2.end()) {
    throw TransformError("parts repeat a vertex");
  }
  if (g.has_edge(e2)) throw TransformError("edge " + show(e2) + " already exists");
  if (g.has_edge(f2)) throw TransformError("edge " + show(f2) + " already exists");
  auto edges = g.edges();
  edges[ie] = std::move(e2);
  edges[jf] = std::move(f2);
  return Hypergraph::from_edges(g.k(), std::move(edges));
}

Hypergraph attach_path(const Hypergraph& g, Vertex u, std::size_t p) {
  if (u >= g.n()) throw TransformError("vertex " + std::to_string(u) + " out of range");
  if (p == 0) return g;
  auto edges = g.edges();
  auto next = static_cast<Vertex>(g.n());
  Vertex tail = u;
  for (std::size_t i = 0; i < p; ++i) {
    Edge e{tail};
    for (int j = 1; j < g.k(); ++j) e.push_back(next++);
    tail = e.back();
    edges.push_back(std::move(e));
  }
  return Hypergraph::with_vertex_count(g.k(), next, std::move(edges));
}

Hypergraph attach_two_paths(const Hypergraph& g, Vertex u, Vertex v, std::size_t p, std::size_t q) {
  if (u == v) throw TransformError("attach_two_paths needs two distinct vertices");
  if (u >= g.n() || v >= g.n()) throw TransformError("vertex out of range");
  return attach_path(attach_path(g, u, p), v, q);
}

bool is_reducible(const Hypergraph& g) {
  const auto d = degrees(g);
  for (std::size_t i = 0; i < g.m(); ++i) {
    auto e = g.edge(i);
    if (std::none_of(e.begin(), e.end(), [&](Vertex v) { return d[v] == 1; })) return false;
  }
  return true;
}

Hypergraph reduce(const Hypergraph& g, PendantChoice choice) {
  if (g.k() == 2) throw NotReducibleError("reduction needs k >= 3");
  const auto d = degrees(g);
  std::vector<Edge> out;
  out.reserve(g.m());
  for (std::size_t i = 0; i < g.m(); ++i) {
    auto e = g.edge(i);
    Edge kept(e.begin(), e.end());
    std::ptrdiff_t drop = -1;
    for (std::size_t j = 0; j < kept.size(); ++j) {
      if (d[kept[j]] != 1) continue;
      drop = static_cast<std::ptrdiff_t>(j);
      if (choice == PendantChoice::smallest) break;
    }
    if (drop < 0) throw NotReducibleError("edge " + show(kept) + " has no pendant vertex");
    kept.erase(kept.begin() + drop);
    out.push_back(std::move(kept));
  }
  auto check = out;
  std::sort(check.begin(), check.end());
  if (auto it = std::adjacent_find(check.begin(), check.end()); it != check.end()) {
    throw NotReducibleError("reduction collapses two edges onto " + show(*it));
  }
  return Hypergraph::from_edges(g.k() - 1, std::move(out));
}

Hypergraph pad_edges(const Hypergraph& g, int r) {
  if (r < 0) throw TransformError("pad count must be non-negative");
  auto edges = g.edges();
  auto next = static_cast<Vertex>(g.n());
  for (auto& e : edges) {
    for (int j = 0; j < r; ++j) e.push_back(next++);
  }
  return Hypergraph::with_vertex_count(g.k() + r, next, std::move(edges));
}

}  // namespace hyperspec
