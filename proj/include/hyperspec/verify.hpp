#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hyperspec/spectral.hpp"

namespace hyperspec {

/// One checked instance. `margin` is the slack left before the check would
/// fail: positive means pass, in the units of the quantity compared.
struct CaseResult {
  std::string label;
  bool passed = false;
  double margin = 0.0;
  std::string detail;
};

struct SuiteReport {
  std::string name;
  std::vector<CaseResult> cases;

  bool passed() const;
  std::size_t failures() const;
};

/// lemma1, lemma3, lemmaTh1, lemma4, rayleigh, polys, tables
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite name.
SuiteReport run_suite(std::string_view name, const SpectralOptions& opts = {});

// Strict comparisons are certified by disjoint bound intervals, so these
// suites tighten the tolerance to at most `kComparisonTol`.
inline constexpr double kComparisonTol = 1e-12;

/// Moving edges onto a vertex with the largest eigenvector entry raises rho.
SuiteReport verify_edge_moving(const SpectralOptions& opts);
/// rho(G_u(p,q)) > rho(G_u(p+1,q-1)) for p >= q >= 1, p+q <= 8.
SuiteReport verify_path_shift(const SpectralOptions& opts);
/// Same shift between two pendant vertices of a pendant edge, k in {3,4}.
SuiteReport verify_two_vertex_path_shift(const SpectralOptions& opts);
/// rho(G)^k == rho(reduce(G))^(k-1) on reducible family instances.
SuiteReport verify_reduction(const SpectralOptions& opts);
/// Rayleigh identity, kernel agreement, and the Rayleigh lower bound.
SuiteReport verify_rayleigh(const SpectralOptions& opts);
/// H_{1,1,1,t} radii against their characteristic polynomials.
SuiteReport verify_polys(const SpectralOptions& opts);
/// D-family radii against the published decimal values.
SuiteReport verify_tables(const SpectralOptions& opts);

/// |f(v)| divided by the spread max f - min f on [v - 0.1, v + 0.1].
double scaled_poly_residual(const std::vector<double>& coeffs, double value);

/// Whether `value` rounds to `printed` at `decimals` places, i.e.
/// |value - printed| <= 0.5 * 10^-decimals. Returns the slack.
double decimal_match_margin(double value, double printed, int decimals);

}  // namespace hyperspec
