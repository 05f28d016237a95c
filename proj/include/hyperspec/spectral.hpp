#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hyperspec/hypergraph.hpp"

namespace hyperspec {

/// Spectral radius estimate of an adjacency tensor with Collatz-Wielandt
/// bounds. `x` is the principal eigenvector estimate, strictly positive and
/// normalized so that sum(x_v^k) = 1.
struct EigenResult {
  double rho = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  std::vector<double> x;
  std::size_t iterations = 0;
  double residual = 0.0;
  bool converged = false;
};

struct SpectralOptions {
  double tol = 1e-10;
  std::size_t max_iter = 1'000'000;
};

/// (A(G)x)_i = sum over edges e containing i of prod_{v in e, v != i} x_v.
///
/// Serial reference kernel: scatters one edge at a time.
std::vector<double> apply_adjacency(const Hypergraph& g, std::span<const double> x);

/// Gather form of the same tensor action, parallelized over vertices with
/// OpenMP. Holds the vertex incidence lists so repeated applications do not
/// rebuild them.
class AdjacencyOperator {
 public:
  explicit AdjacencyOperator(const Hypergraph& g);

  std::size_t size() const { return n_; }
  int order() const { return k_; }

  /// y = A(G) x. Both spans must have length n.
  void apply(std::span<const double> x, std::span<double> y) const;

  /// Vertex count from which apply() runs in parallel.
  static constexpr std::size_t kParallelThreshold = 4096;

 private:
  int k_;
  std::size_t n_;
  std::vector<Vertex> flat_;
  Incidence inc_;
};

/// x^T (A(G) x) evaluated edge-wise as k * sum_e prod_{v in e} x_v.
double rayleigh(const Hypergraph& g, std::span<const double> x);

/// Shifted power iteration on B(x) = A(G)x + x^{k-1}, stopped when the
/// certified gap between the Collatz-Wielandt bounds drops to tol.
/// Requires a connected hypergraph. A run that hits max_iter is returned
/// with converged == false and the best bounds seen.
EigenResult spectral_radius(const Hypergraph& g, const SpectralOptions& opts = {});

/// max_i |(A(G)x)_i - rho * x_i^{k-1}|
double residual(const Hypergraph& g, const EigenResult& r);
double residual(const Hypergraph& g, double rho, std::span<const double> x);

/// Horner evaluation; coefficients are highest degree first.
double poly_residual(std::span<const double> coeffs, double value);

/// Whether a's bound interval lies strictly below b's.
inline bool certified_less(const EigenResult& a, const EigenResult& b) { return a.upper < b.lower; }

}  // namespace hyperspec
