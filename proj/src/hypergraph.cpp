#include "hyperspec/hypergraph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>

namespace hyperspec {
namespace {

std::string edge_text(std::span<const Vertex> e) {
  std::string s = "{";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(e[i]);
  }
  return s + "}";
}

// Sorts each edge, checks uniformity and distinctness, sorts the edge list
// and rejects duplicate edges. Returns the flattened list.
std::vector<Vertex> normalize(int k, std::vector<Edge>& edges) {
  if (k < 2) throw ParseError("edge cardinality k must be at least 2, got " + std::to_string(k));
  if (edges.empty()) throw ParseError("hypergraph must have at least one edge");
  for (auto& e : edges) {
    if (e.size() != static_cast<std::size_t>(k)) {
      throw ParseError("edge " + edge_text(e) + " has " + std::to_string(e.size()) +
                       " vertices, expected " + std::to_string(k));
    }
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
      throw ParseError("edge " + edge_text(e) + " repeats a vertex");
    }
  }
  std::sort(edges.begin(), edges.end());
  if (auto it = std::adjacent_find(edges.begin(), edges.end()); it != edges.end()) {
    throw ParseError("duplicate edge " + edge_text(*it));
  }
  std::vector<Vertex> flat;
  flat.reserve(edges.size() * static_cast<std::size_t>(k));
  for (const auto& e : edges) flat.insert(flat.end(), e.begin(), e.end());
  return flat;
}

}  // namespace

Hypergraph Hypergraph::from_edges(int k, std::vector<Edge> edges) {
  std::vector<Vertex> used;
  for (const auto& e : edges) used.insert(used.end(), e.begin(), e.end());
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  for (auto& e : edges) {
    for (auto& v : e) {
      v = static_cast<Vertex>(std::lower_bound(used.begin(), used.end(), v) - used.begin());
    }
  }
  auto flat = normalize(k, edges);
  return Hypergraph(k, used.size(), std::move(flat));
}

Hypergraph Hypergraph::with_vertex_count(int k, std::size_t n, std::vector<Edge> edges) {
  std::vector<char> seen(n, 0);
  for (const auto& e : edges) {
    for (Vertex v : e) {
      if (v >= n) {
        throw ParseError("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n));
      }
      seen[v] = 1;
    }
  }
  auto flat = normalize(k, edges);
  if (auto it = std::find(seen.begin(), seen.end(), 0); it != seen.end()) {
    throw ParseError("vertex " + std::to_string(it - seen.begin()) + " is isolated");
  }
  return Hypergraph(k, n, std::move(flat));
}

std::vector<Edge> Hypergraph::edges() const {
  std::vector<Edge> out;
  out.reserve(m());
  for (std::size_t i = 0; i < m(); ++i) {
    auto e = edge(i);
    out.emplace_back(e.begin(), e.end());
  }
  return out;
}

std::size_t Hypergraph::find_edge(std::span<const Vertex> sorted_edge) const {
  if (sorted_edge.size() != static_cast<std::size_t>(k_)) return m();
  // Binary search over the lexicographically sorted edge list.
  std::size_t lo = 0, hi = m();
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    auto e = edge(mid);
    if (std::lexicographical_compare(e.begin(), e.end(), sorted_edge.begin(), sorted_edge.end())) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (lo < m() && std::ranges::equal(edge(lo), sorted_edge)) return lo;
  return m();
}

bool Hypergraph::has_edge(std::span<const Vertex> sorted_edge) const {
  return find_edge(sorted_edge) != m();
}

namespace {

std::size_t parse_number(std::string_view tok, std::size_t line) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError("line " + std::to_string(line) + ": '" + std::string(tok) +
                     "' is not a non-negative integer");
  }
  return value;
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

Hypergraph parse(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  while (!lines.empty() && tokens(lines.back()).empty()) lines.pop_back();
  if (lines.empty()) throw ParseError("empty input");

  auto header = tokens(lines[0]);
  if (header.size() != 3) throw ParseError("malformed header: expected 'k n m'");
  const auto k = parse_number(header[0], 1);
  const auto n = parse_number(header[1], 1);
  const auto m = parse_number(header[2], 1);
  if (k < 2 || k > 64) throw ParseError("malformed header: k must be in 2..64");
  if (lines.size() - 1 != m) {
    throw ParseError("header declares " + std::to_string(m) + " edges but found " +
                     std::to_string(lines.size() - 1));
  }
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    Edge e;
    for (auto tok : tokens(lines[i])) {
      const auto v = parse_number(tok, i + 1);
      if (v >= n) {
        throw ParseError("line " + std::to_string(i + 1) + ": vertex " + std::to_string(v) +
                         " out of range for n=" + std::to_string(n));
      }
      e.push_back(static_cast<Vertex>(v));
    }
    edges.push_back(std::move(e));
  }
  return Hypergraph::with_vertex_count(static_cast<int>(k), n, std::move(edges));
}

Hypergraph read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

std::string serialize(const Hypergraph& g) {
  std::string out = std::to_string(g.k()) + ' ' + std::to_string(g.n()) + ' ' + std::to_string(g.m()) + '\n';
  for (std::size_t i = 0; i < g.m(); ++i) {
    auto e = g.edge(i);
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (j) out += ' ';
      out += std::to_string(e[j]);
    }
    out += '\n';
  }
  return out;
}

void write_file(const Hypergraph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << serialize(g);
}

bool is_connected(const Hypergraph& g) {
  std::vector<Vertex> parent(g.n());
  std::iota(parent.begin(), parent.end(), Vertex{0});
  auto find = [&](Vertex v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::size_t components = g.n();
  for (std::size_t i = 0; i < g.m(); ++i) {
    auto e = g.edge(i);
    for (std::size_t j = 1; j < e.size(); ++j) {
      auto a = find(e[0]), b = find(e[j]);
      if (a != b) {
        parent[a] = b;
        --components;
      }
    }
  }
  return components == 1;
}

std::vector<std::size_t> degrees(const Hypergraph& g) {
  std::vector<std::size_t> d(g.n(), 0);
  for (Vertex v : g.flat()) ++d[v];
  return d;
}

Incidence incidence(const Hypergraph& g) {
  Incidence inc;
  inc.offsets.assign(g.n() + 1, 0);
  for (Vertex v : g.flat()) ++inc.offsets[v + 1];
  std::partial_sum(inc.offsets.begin(), inc.offsets.end(), inc.offsets.begin());
  inc.edges.resize(g.flat().size());
  auto cursor = inc.offsets;
  for (std::size_t i = 0; i < g.m(); ++i) {
    for (Vertex v : g.edge(i)) inc.edges[cursor[v]++] = i;
  }
  return inc;
}

Hypergraph relabel(const Hypergraph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.n()) throw std::invalid_argument("relabel: permutation size mismatch");
  auto edges = g.edges();
  for (auto& e : edges) {
    for (auto& v : e) v = perm[v];
  }
  return Hypergraph::with_vertex_count(g.k(), g.n(), std::move(edges));
}

}  // namespace hyperspec
