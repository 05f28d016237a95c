#include "hyperspec/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace hyperspec {
namespace {

double ipow(double base, int exp) {
  double r = 1.0;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

void check_length(const Hypergraph& g, std::size_t len) {
  if (len != g.n()) {
    throw std::invalid_argument("vector length " + std::to_string(len) + " does not match n=" +
                                std::to_string(g.n()));
  }
}

// Fills out[j] = prod_{i != j} e[i] using prefix/suffix products, so zero
// entries need no special casing.
void products_excluding(std::span<const double> vals, std::span<double> out) {
  const auto k = vals.size();
  double prefix = 1.0;
  for (std::size_t j = 0; j < k; ++j) {
    out[j] = prefix;
    prefix *= vals[j];
  }
  double suffix = 1.0;
  for (std::size_t j = k; j-- > 0;) {
    out[j] *= suffix;
    suffix *= vals[j];
  }
}

void normalize_k(std::vector<double>& x, int k) {
  double s = 0.0;
  for (double v : x) s += ipow(v, k);
  const double scale = std::pow(s, -1.0 / k);
  for (double& v : x) v *= scale;
}

}  // namespace

std::vector<double> apply_adjacency(const Hypergraph& g, std::span<const double> x) {
  check_length(g, x.size());
  const auto k = static_cast<std::size_t>(g.k());
  std::vector<double> y(g.n(), 0.0);
  std::vector<double> vals(k), excl(k);
  for (std::size_t i = 0; i < g.m(); ++i) {
    auto e = g.edge(i);
    for (std::size_t j = 0; j < k; ++j) vals[j] = x[e[j]];
    products_excluding(vals, excl);
    for (std::size_t j = 0; j < k; ++j) y[e[j]] += excl[j];
  }
  return y;
}

AdjacencyOperator::AdjacencyOperator(const Hypergraph& g)
    : k_(g.k()), n_(g.n()), flat_(g.flat().begin(), g.flat().end()), inc_(incidence(g)) {}

void AdjacencyOperator::apply(std::span<const double> x, std::span<double> y) const {
  if (x.size() != n_ || y.size() != n_) throw std::invalid_argument("AdjacencyOperator: length mismatch");
  const auto k = static_cast<std::size_t>(k_);
  const auto n = static_cast<std::ptrdiff_t>(n_);
#pragma omp parallel for schedule(static) if (n_ >= kParallelThreshold)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto v = static_cast<Vertex>(i);
    double acc = 0.0;
    for (std::size_t e : inc_.of(v)) {
      const Vertex* edge = flat_.data() + e * k;
      double prod = 1.0;
      for (std::size_t j = 0; j < k; ++j) {
        if (edge[j] != v) prod *= x[edge[j]];
      }
      acc += prod;
    }
    y[static_cast<std::size_t>(i)] = acc;
  }
}

double rayleigh(const Hypergraph& g, std::span<const double> x) {
  check_length(g, x.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < g.m(); ++i) {
    double prod = 1.0;
    for (Vertex v : g.edge(i)) prod *= x[v];
    sum += prod;
  }
  return g.k() * sum;
}

EigenResult spectral_radius(const Hypergraph& g, const SpectralOptions& opts) {
  if (!(opts.tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (opts.max_iter < 1) throw std::invalid_argument("max_iter must be at least 1");
  if (!is_connected(g)) throw DisconnectedError("spectral radius requires a connected hypergraph");

  const int k = g.k();
  const std::size_t n = g.n();
  const AdjacencyOperator op(g);

  std::vector<double> x(n, 1.0);
  normalize_k(x, k);
  std::vector<double> y(n);

  EigenResult best;
  best.lower = -std::numeric_limits<double>::infinity();
  best.upper = std::numeric_limits<double>::infinity();

  for (std::size_t it = 1; it <= opts.max_iter; ++it) {
    op.apply(x, y);
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (std::size_t i = 0; i < n; ++i) {
      const double xk1 = ipow(x[i], k - 1);
      y[i] += xk1;
      const double ratio = y[i] / xk1;
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
    if (hi - lo < best.upper - best.lower) {
      best.lower = lo - 1.0;
      best.upper = hi - 1.0;
      best.rho = 0.5 * (lo + hi) - 1.0;
      best.x = x;
      best.iterations = it;
    }
    if (hi - lo <= opts.tol) {
      best.converged = true;
      break;
    }
    const double root = 1.0 / (k - 1);
    for (std::size_t i = 0; i < n; ++i) x[i] = k == 2 ? y[i] : std::pow(y[i], root);
    normalize_k(x, k);
  }
  if (!best.converged) best.iterations = opts.max_iter;
  best.residual = residual(g, best.rho, best.x);
  return best;
}

double residual(const Hypergraph& g, double rho, std::span<const double> x) {
  const auto ax = apply_adjacency(g, x);
  double worst = 0.0;
  for (std::size_t i = 0; i < ax.size(); ++i) {
    worst = std::max(worst, std::abs(ax[i] - rho * ipow(x[i], g.k() - 1)));
  }
  return worst;
}

double residual(const Hypergraph& g, const EigenResult& r) { return residual(g, r.rho, r.x); }

double poly_residual(std::span<const double> coeffs, double value) {
  if (coeffs.empty()) throw std::invalid_argument("polynomial needs at least one coefficient");
  double acc = 0.0;
  for (double c : coeffs) acc = acc * value + c;
  return acc;
}

}  // namespace hyperspec
