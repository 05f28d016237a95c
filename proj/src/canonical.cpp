#include "hyperspec/canonical.hpp"

#include <algorithm>
#include <map>

namespace hyperspec {
namespace {

// Ordered partition of the vertices: color[v] is the rank of v's cell.
using Coloring = std::vector<int>;

class Canonicalizer {
 public:
  explicit Canonicalizer(const Hypergraph& g) : g_(g), inc_(incidence(g)) {
    // Twins share their whole incident edge list; swapping two of them is an
    // automorphism, so only one of each twin class needs to be branched on.
    std::map<std::vector<std::size_t>, int> classes;
    twin_.resize(g.n());
    for (Vertex v = 0; v < g.n(); ++v) {
      auto span = inc_.of(v);
      std::vector<std::size_t> key(span.begin(), span.end());
      twin_[v] = classes.try_emplace(std::move(key), static_cast<int>(classes.size())).first->second;
    }
  }

  CanonicalForm run() {
    Coloring start(g_.n());
    auto d = degrees(g_);
    for (Vertex v = 0; v < g_.n(); ++v) start[v] = static_cast<int>(d[v]);
    refine(start);
    search(start);
    return {g_.k(), g_.n(), std::move(best_)};
  }

 private:
  // Splits cells by the multiset of incident edge color-signatures until
  // stable. Signatures start with the old color, so the cell order refines
  // the previous order and never depends on vertex labels.
  void refine(Coloring& color) const {
    std::size_t cells = count_cells(color);
    for (;;) {
      std::vector<std::vector<int>> edge_sig(g_.m());
      for (std::size_t i = 0; i < g_.m(); ++i) {
        for (Vertex v : g_.edge(i)) edge_sig[i].push_back(color[v]);
        std::sort(edge_sig[i].begin(), edge_sig[i].end());
      }
      std::vector<std::pair<int, std::vector<std::vector<int>>>> sig(g_.n());
      for (Vertex v = 0; v < g_.n(); ++v) {
        sig[v].first = color[v];
        for (std::size_t e : inc_.of(v)) sig[v].second.push_back(edge_sig[e]);
        std::sort(sig[v].second.begin(), sig[v].second.end());
      }
      auto distinct = sig;
      std::sort(distinct.begin(), distinct.end());
      distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
      for (Vertex v = 0; v < g_.n(); ++v) {
        color[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig[v]) - distinct.begin());
      }
      if (distinct.size() == cells) return;
      cells = distinct.size();
    }
  }

  static std::size_t count_cells(const Coloring& color) {
    auto c = color;
    std::sort(c.begin(), c.end());
    return static_cast<std::size_t>(std::unique(c.begin(), c.end()) - c.begin());
  }

  void search(const Coloring& color) {
    // First non-singleton cell is the target.
    std::vector<int> size(g_.n(), 0);
    for (int c : color) ++size[c];
    int target = -1;
    for (std::size_t c = 0; c < size.size(); ++c) {
      if (size[c] > 1) {
        target = static_cast<int>(c);
        break;
      }
    }
    if (target < 0) {
      leaf(color);
      return;
    }
    std::vector<int> tried;
    for (Vertex v = 0; v < g_.n(); ++v) {
      if (color[v] != target) continue;
      if (std::find(tried.begin(), tried.end(), twin_[v]) != tried.end()) continue;
      tried.push_back(twin_[v]);
      Coloring next = color;
      for (auto& c : next) {
        if (c > target) ++c;
      }
      for (Vertex w = 0; w < g_.n(); ++w) {
        if (color[w] == target && w != v) next[w] = target + 1;
      }
      refine(next);
      search(next);
    }
  }

  void leaf(const Coloring& color) {
    const auto k = static_cast<std::size_t>(g_.k());
    std::vector<Edge> edges(g_.m());
    for (std::size_t i = 0; i < g_.m(); ++i) {
      for (Vertex v : g_.edge(i)) edges[i].push_back(static_cast<Vertex>(color[v]));
      std::sort(edges[i].begin(), edges[i].end());
    }
    std::sort(edges.begin(), edges.end());
    std::vector<Vertex> flat;
    flat.reserve(g_.m() * k);
    for (const auto& e : edges) flat.insert(flat.end(), e.begin(), e.end());
    if (best_.empty() || flat < best_) best_ = std::move(flat);
  }

  const Hypergraph& g_;
  Incidence inc_;
  std::vector<int> twin_;
  std::vector<Vertex> best_;
};

}  // namespace

std::string CanonicalForm::bytes() const {
  std::string s = std::to_string(k) + ' ' + std::to_string(n) + ' ' + std::to_string(m()) + '|';
  for (std::size_t i = 0; i < flat.size(); ++i) {
    if (i) s += (i % static_cast<std::size_t>(k) == 0) ? ',' : ' ';
    s += std::to_string(flat[i]);
  }
  return s;
}

Hypergraph CanonicalForm::to_hypergraph() const {
  std::vector<Edge> edges;
  const auto kk = static_cast<std::size_t>(k);
  for (std::size_t i = 0; i < flat.size(); i += kk) edges.emplace_back(flat.begin() + i, flat.begin() + i + kk);
  return Hypergraph::with_vertex_count(k, n, std::move(edges));
}

CanonicalForm canonical_form(const Hypergraph& g, std::size_t max_n) {
  if (g.n() > max_n) {
    throw CapExceededError("hypergraph has " + std::to_string(g.n()) + " vertices, cap is " +
                           std::to_string(max_n));
  }
  return Canonicalizer(g).run();
}

bool is_isomorphic(const Hypergraph& g, const Hypergraph& h, std::size_t max_n) {
  if (g.k() != h.k() || g.n() != h.n() || g.m() != h.m()) return false;
  return canonical_form(g, max_n) == canonical_form(h, max_n);
}

}  // namespace hyperspec
