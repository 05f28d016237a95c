#include "hyperspec/enumerate.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace hyperspec {
namespace {

// Calls f on every size-s subset of 0..n-1, in lexicographic order.
template <typename F>
void for_each_subset(std::size_t n, std::size_t s, F&& f) {
  if (s > n) return;
  std::vector<Vertex> idx(s);
  for (std::size_t i = 0; i < s; ++i) idx[i] = static_cast<Vertex>(i);
  for (;;) {
    f(idx);
    std::size_t i = s;
    while (i > 0 && idx[i - 1] == n - s + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<CanonicalForm> children(const Hypergraph& parent, std::size_t max_n) {
  const int k = parent.k();
  const auto n = parent.n();
  std::vector<CanonicalForm> out;
  const auto base = parent.edges();
  for (std::size_t shared = 1; shared <= std::min<std::size_t>(k, n); ++shared) {
    for_each_subset(n, shared, [&](const std::vector<Vertex>& subset) {
      Edge e = subset;
      for (std::size_t f = 0; f < static_cast<std::size_t>(k) - shared; ++f) e.push_back(static_cast<Vertex>(n + f));
      if (parent.has_edge(e)) return;
      auto edges = base;
      edges.push_back(std::move(e));
      out.push_back(canonical_form(Hypergraph::from_edges(k, std::move(edges)), max_n));
    });
  }
  return out;
}

std::vector<Hypergraph> grow(const std::vector<Hypergraph>& parents, std::size_t max_n, Execution exec) {
  std::set<CanonicalForm> found;
  const auto count = static_cast<std::ptrdiff_t>(parents.size());
  if (exec == Execution::serial) {
    for (const auto& p : parents) {
      for (auto& c : children(p, max_n)) found.insert(std::move(c));
    }
  } else {
#pragma omp parallel
    {
      std::set<CanonicalForm> local;
#pragma omp for schedule(dynamic)
      for (std::ptrdiff_t i = 0; i < count; ++i) {
        for (auto& c : children(parents[static_cast<std::size_t>(i)], max_n)) local.insert(std::move(c));
      }
#pragma omp critical(hyperspec_enumerate_merge)
      found.merge(local);
    }
  }
  std::vector<Hypergraph> out;
  out.reserve(found.size());
  for (const auto& c : found) out.push_back(c.to_hypergraph());
  return out;
}

}  // namespace

std::vector<Hypergraph> enumerate_connected(int k, int m, const EnumerateOptions& opts) {
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  if (m < 1) throw std::invalid_argument("m must be at least 1");
  const auto needed = static_cast<std::size_t>(k - 1) * static_cast<std::size_t>(m) + 1;
  if (needed > opts.max_n) {
    throw CapExceededError("k=" + std::to_string(k) + ", m=" + std::to_string(m) + " needs up to " +
                           std::to_string(needed) + " vertices, cap is " + std::to_string(opts.max_n));
  }
  Edge first;
  for (int v = 0; v < k; ++v) first.push_back(static_cast<Vertex>(v));
  std::vector<Hypergraph> level{Hypergraph::from_edges(k, {first})};
  for (int edges = 2; edges <= m; ++edges) level = grow(level, opts.max_n, opts.execution);
  return level;
}

bool RankingReport::minimum_certified() const {
  if (classes.empty()) return false;
  return classes.size() == 1 || certified_less(classes[0].eigen, classes[1].eigen);
}

bool RankingReport::second_certified() const {
  if (classes.size() < 2) return false;
  if (!certified_less(classes[0].eigen, classes[1].eigen)) return false;
  return classes.size() == 2 || certified_less(classes[1].eigen, classes[2].eigen);
}

RankingReport rank_by_rho(int k, int m, const RankOptions& opts) {
  auto graphs = enumerate_connected(k, m, opts.enumeration);
  RankingReport report;
  report.k = k;
  report.m = m;
  report.total_count = graphs.size();
  report.classes.resize(graphs.size(), RankedClass{{}, graphs.front(), {}, false});

  const auto count = static_cast<std::ptrdiff_t>(graphs.size());
  auto rank_one = [&](std::size_t i) {
    auto& c = report.classes[i];
    c.graph = graphs[i];
    c.canonical = canonical_form(graphs[i], opts.enumeration.max_n);
    c.eigen = spectral_radius(graphs[i], opts.spectral);
  };
  if (opts.enumeration.execution == Execution::serial) {
    for (std::ptrdiff_t i = 0; i < count; ++i) rank_one(static_cast<std::size_t>(i));
  } else {
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < count; ++i) rank_one(static_cast<std::size_t>(i));
  }

  std::sort(report.classes.begin(), report.classes.end(), [](const RankedClass& a, const RankedClass& b) {
    if (a.eigen.lower != b.eigen.lower) return a.eigen.lower < b.eigen.lower;
    return a.canonical < b.canonical;
  });
  for (std::size_t i = 0; i + 1 < report.classes.size(); ++i) {
    report.classes[i].tied_with_next = !certified_less(report.classes[i].eigen, report.classes[i + 1].eigen);
  }
  return report;
}

}  // namespace hyperspec
