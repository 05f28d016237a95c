#include "hyperspec/families.hpp"

#include <array>
#include <charconv>
#include <stdexcept>
#include <utility>

#include "hyperspec/canonical.hpp"

namespace hyperspec {
namespace {

constexpr int kMaxK = 64;

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

void require_k(int k, int min_k) {
  require(k >= min_k && k <= kMaxK, "k must lie in " + std::to_string(min_k) + ".." + std::to_string(kMaxK));
}

// Appends edges with fresh vertex labels. Path edges continue from the
// largest fresh vertex of the previous edge, matching attach_path.
class Builder {
 public:
  explicit Builder(int k) : k_(k) {}

  Vertex fresh() { return next_++; }

  void add(Edge e) {
    for (Vertex v : e) {
      if (v >= next_) next_ = v + 1;
    }
    edges_.push_back(std::move(e));
  }

  Vertex add_path(Vertex from, int length) {
    Vertex tail = from;
    for (int i = 0; i < length; ++i) {
      Edge e{tail};
      for (int j = 1; j < k_; ++j) e.push_back(fresh());
      tail = e.back();
      edges_.push_back(std::move(e));
    }
    return tail;
  }

  void add_loose_path(int m) {
    for (int i = 0; i < m; ++i) {
      Edge e;
      for (int j = 0; j < k_; ++j) e.push_back(static_cast<Vertex>(i * (k_ - 1) + j));
      add(std::move(e));
    }
  }

  Hypergraph build() && { return Hypergraph::with_vertex_count(k_, next_, std::move(edges_)); }

 private:
  int k_;
  Vertex next_ = 0;
  std::vector<Edge> edges_;
};

struct NameEntry {
  Family family;
  const char* name;
  std::size_t arity;
};

constexpr std::array<NameEntry, 9> kNames{{
    {Family::P, "P", 2},
    {Family::C, "C", 2},
    {Family::D, "D", 2},
    {Family::Dprime, "Dp", 2},
    {Family::E3, "E3", 3},
    {Family::F3, "F3", 3},
    {Family::G3, "G3", 5},
    {Family::H4, "H4", 1},
    {Family::TwoEdge, "TE", 2},
}};

}  // namespace

Hypergraph loose_path(int k, int m) {
  require_k(k, 2);
  require(m >= 1, "loose path needs m >= 1");
  Builder b(k);
  b.add_loose_path(m);
  return std::move(b).build();
}

Hypergraph loose_cycle(int k, int m) {
  require_k(k, 2);
  require(m >= 3, "loose cycle needs m >= 3");
  const auto n = static_cast<Vertex>((k - 1) * m);
  Builder b(k);
  for (int i = 0; i < m; ++i) {
    Edge e;
    for (int j = 0; j < k; ++j) e.push_back(static_cast<Vertex>(i * (k - 1) + j) % n);
    b.add(std::move(e));
  }
  return std::move(b).build();
}

Hypergraph d_family(int k, int m) {
  require_k(k, 2);
  require(m >= 3, "D family needs m >= 3");
  Builder b(k);
  b.add_loose_path(m - 1);
  b.add_path(static_cast<Vertex>(k - 1), 1);
  return std::move(b).build();
}

Hypergraph d_prime_family(int k, int m) {
  require_k(k, 3);
  require(m >= 3, "D' family needs m >= 3");
  Builder b(k);
  b.add_loose_path(m - 1);
  // e_2 = {k-1, ..., 2k-2}; k is its first vertex off the spine.
  b.add_path(static_cast<Vertex>(k), 1);
  return std::move(b).build();
}

Hypergraph e3_family(int i, int j, int l) {
  require(i >= 1 && j >= 1 && l >= 1, "E3 legs must be >= 1");
  Builder b(3);
  const Vertex center = b.fresh();
  for (int len : {i, j, l}) b.add_path(center, len);
  return std::move(b).build();
}

Hypergraph f3_family(int i, int j, int l) {
  require(i >= 0 && j >= 0 && l >= 0, "F3 legs must be >= 0");
  Builder b(3);
  b.add({0, 1, 2});
  b.add_path(0, i);
  b.add_path(1, j);
  b.add_path(2, l);
  return std::move(b).build();
}

Hypergraph g3_family(int i, int j, int l, int p, int q) {
  require(i >= 1 && j >= 1 && p >= 1 && q >= 1, "G3 legs i, j, p, q must be >= 1");
  require(l >= 0, "G3 spine parameter l must be >= 0");
  Builder b(3);
  b.add_loose_path(l + 2);
  const auto last = static_cast<Vertex>(2 * (l + 1));
  b.add_path(0, i);
  b.add_path(1, j);
  b.add_path(last + 1, p);
  b.add_path(last + 2, q);
  return std::move(b).build();
}

Hypergraph h4_family(int t) {
  require(t >= 1 && t <= 4, "H4 needs t in 1..4");
  Builder b(4);
  b.add({0, 1, 2, 3});
  for (Vertex v : {0u, 1u, 2u}) b.add_path(v, 1);
  b.add_path(3, t);
  return std::move(b).build();
}

Hypergraph two_edge_overlap(int k, int a) {
  require_k(k, 2);
  require(a >= 1 && a <= k - 1, "overlap a must lie in 1..k-1");
  Builder b(k);
  Edge e, f;
  for (int v = 0; v < k; ++v) e.push_back(static_cast<Vertex>(v));
  for (int v = k - a; v < 2 * k - a; ++v) f.push_back(static_cast<Vertex>(v));
  b.add(std::move(e));
  b.add(std::move(f));
  return std::move(b).build();
}

std::string FamilySpec::to_string() const {
  std::string s;
  for (const auto& entry : kNames) {
    if (entry.family == family) s = entry.name;
  }
  s += ':';
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(params[i]);
  }
  return s;
}

FamilySpec parse_family(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("family string '" + std::string(text) + "' lacks ':'");
  }
  const auto name = text.substr(0, colon);
  const NameEntry* entry = nullptr;
  for (const auto& e : kNames) {
    if (name == e.name) entry = &e;
  }
  if (!entry) throw std::invalid_argument("unknown family '" + std::string(name) + "'");

  FamilySpec spec{entry->family, {}};
  auto rest = text.substr(colon + 1);
  while (true) {
    const auto comma = rest.find(',');
    const auto tok = rest.substr(0, comma);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw std::invalid_argument("bad family parameter '" + std::string(tok) + "'");
    }
    spec.params.push_back(value);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  if (spec.params.size() != entry->arity) {
    throw std::invalid_argument(std::string(entry->name) + " takes " + std::to_string(entry->arity) +
                                " parameters");
  }
  return spec;
}

Hypergraph expand(const FamilySpec& spec) {
  const auto& p = spec.params;
  auto arity = [&](std::size_t n) { require(p.size() == n, "wrong parameter count for " + spec.to_string()); };
  switch (spec.family) {
    case Family::P: arity(2); return loose_path(p[0], p[1]);
    case Family::C: arity(2); return loose_cycle(p[0], p[1]);
    case Family::D: arity(2); return d_family(p[0], p[1]);
    case Family::Dprime: arity(2); return d_prime_family(p[0], p[1]);
    case Family::E3: arity(3); return e3_family(p[0], p[1], p[2]);
    case Family::F3: arity(3); return f3_family(p[0], p[1], p[2]);
    case Family::G3: arity(5); return g3_family(p[0], p[1], p[2], p[3], p[4]);
    case Family::H4: arity(1); return h4_family(p[0]);
    case Family::TwoEdge: arity(2); return two_edge_overlap(p[0], p[1]);
  }
  throw std::invalid_argument("unknown family");
}

std::optional<std::string> identify(const Hypergraph& g) {
  const int k = g.k();
  const int m = static_cast<int>(g.m());
  std::vector<FamilySpec> candidates{{Family::P, {k, m}}};
  if (m == 2) {
    for (int a = 2; a < k; ++a) candidates.push_back({Family::TwoEdge, {k, a}});
  }
  if (m >= 3) {
    candidates.push_back({Family::D, {k, m}});
    if (k >= 3) candidates.push_back({Family::Dprime, {k, m}});
    candidates.push_back({Family::C, {k, m}});
  }
  for (const auto& spec : candidates) {
    const auto h = expand(spec);
    if (h.n() == g.n() && is_isomorphic(g, h, g.n())) return spec.to_string();
  }
  return std::nullopt;
}

}  // namespace hyperspec
