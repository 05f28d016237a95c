#include "hyperspec/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "hyperspec/families.hpp"
#include "hyperspec/transforms.hpp"

namespace hyperspec {
namespace {

SpectralOptions tight(const SpectralOptions& opts) {
  auto t = opts;
  t.tol = std::min(opts.tol, kComparisonTol);
  return t;
}

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

// Passes when `smaller` lies certifiably below `larger`.
CaseResult strict_case(std::string label, const EigenResult& smaller, const EigenResult& larger) {
  CaseResult c;
  c.label = std::move(label);
  c.margin = larger.lower - smaller.upper;
  c.passed = smaller.converged && larger.converged && c.margin > 0.0;
  c.detail = "rho " + fmt_double(smaller.rho) + " < " + fmt_double(larger.rho);
  return c;
}

std::string with_pad(const std::string& label, int pad) {
  return pad ? label + "+pad" + std::to_string(pad) : label;
}

}  // namespace

bool SuiteReport::passed() const {
  return !cases.empty() && std::all_of(cases.begin(), cases.end(), [](const CaseResult& c) { return c.passed; });
}

std::size_t SuiteReport::failures() const {
  return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const CaseResult& c) { return !c.passed; }));
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"lemma1", "lemma3", "lemmaTh1", "lemma4", "rayleigh", "polys", "tables"};
  return names;
}

SuiteReport run_suite(std::string_view name, const SpectralOptions& opts) {
  if (name == "lemma1") return verify_edge_moving(opts);
  if (name == "lemma3") return verify_path_shift(opts);
  if (name == "lemmaTh1") return verify_two_vertex_path_shift(opts);
  if (name == "lemma4") return verify_reduction(opts);
  if (name == "rayleigh") return verify_rayleigh(opts);
  if (name == "polys") return verify_polys(opts);
  if (name == "tables") return verify_tables(opts);
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

SuiteReport verify_edge_moving(const SpectralOptions& opts) {
  SuiteReport report{"lemma1", {}};
  const auto o = tight(opts);
  constexpr double kPreconditionSlack = 1e-9;

  // P_3^(3) with e_3 moved from u_2 to u_1 gives D_3^(3); x_{u_1} = x_{u_2}
  // by symmetry.
  {
    const auto g = loose_path(3, 3);
    const auto before = spectral_radius(g, o);
    const auto after = move_edges(g, {2, {{{4, 5, 6}, 4}}});
    auto c = strict_case("P:3,3 move {4,5,6} 4->2", before, spectral_radius(after, o));
    c.passed = c.passed && before.x[2] + kPreconditionSlack >= before.x[4];
    report.cases.push_back(std::move(c));
  }

  const std::vector<std::string> bases{"P:3,4", "D:3,5", "Dp:3,5", "E3:1,2,2", "F3:1,1,2", "P:2,5",
                                       "D:2,5", "P:4,3", "D:4,4",  "H4:1",     "C:3,4"};
  for (const auto& name : bases) {
    const auto g = expand(parse_family(name));
    const auto r = spectral_radius(g, o);
    const auto u = static_cast<Vertex>(std::max_element(r.x.begin(), r.x.end()) - r.x.begin());
    std::vector<std::pair<Edge, Vertex>> singles;
    for (std::size_t i = 0; i < g.m() && singles.size() < 2; ++i) {
      auto span = g.edge(i);
      Edge e(span.begin(), span.end());
      if (std::find(e.begin(), e.end(), u) != e.end()) continue;
      for (Vertex v : e) {
        if (r.x[u] + kPreconditionSlack < r.x[v]) continue;
        Edge moved = e;
        *std::find(moved.begin(), moved.end(), v) = u;
        std::sort(moved.begin(), moved.end());
        if (g.has_edge(moved)) continue;
        const auto h = move_edges(g, {u, {{e, v}}});
        if (!is_connected(h)) continue;
        singles.emplace_back(e, v);
        report.cases.push_back(strict_case(name + " move " + std::to_string(v) + "->" + std::to_string(u), r,
                                           spectral_radius(h, o)));
        break;
      }
    }
    if (singles.size() == 2) {
      try {
        const auto h = move_edges(g, {u, singles});
        if (is_connected(h)) {
          report.cases.push_back(strict_case(name + " move two edges ->" + std::to_string(u), r, spectral_radius(h, o)));
        }
      } catch (const TransformError&) {
        // The two single moves can collide on the same new edge.
      }
    }
  }
  return report;
}

SuiteReport verify_path_shift(const SpectralOptions& opts) {
  SuiteReport report{"lemma3", {}};
  const auto o = tight(opts);
  for (int k = 2; k <= 4; ++k) {
    struct Base {
      std::string name;
      Hypergraph g;
      Vertex u;
    };
    const std::vector<Base> bases{{"P:" + std::to_string(k) + ",1", loose_path(k, 1), 0},
                                  {"P:" + std::to_string(k) + ",2", loose_path(k, 2), 0},
                                  {"P:" + std::to_string(k) + ",2", loose_path(k, 2), static_cast<Vertex>(k - 1)}};
    for (const auto& b : bases) {
      for (int q = 1; q <= 4; ++q) {
        for (int p = q; p + q <= 8; ++p) {
          const auto longer = attach_path(attach_path(b.g, b.u, p + 1), b.u, q - 1);
          const auto balanced = attach_path(attach_path(b.g, b.u, p), b.u, q);
          report.cases.push_back(strict_case(b.name + " u=" + std::to_string(b.u) + " (" + std::to_string(p) + "," +
                                                 std::to_string(q) + ")",
                                             spectral_radius(longer, o), spectral_radius(balanced, o)));
        }
      }
    }
  }
  return report;
}

SuiteReport verify_two_vertex_path_shift(const SpectralOptions& opts) {
  SuiteReport report{"lemmaTh1", {}};
  const auto o = tight(opts);
  for (int k = 3; k <= 4; ++k) {
    struct Base {
      std::string name;
      Hypergraph g;
      Vertex u, v;
    };
    const auto kk = static_cast<Vertex>(k);
    // Pendant edge e and two of its pendant vertices: the last edge of P_2,
    // and the attached edge of D_3.
    const std::vector<Base> bases{{"P:" + std::to_string(k) + ",2", loose_path(k, 2), kk, kk + 1},
                                  {"D:" + std::to_string(k) + ",3", d_family(k, 3), 2 * kk - 1, 2 * kk}};
    for (const auto& b : bases) {
      for (int q = 1; q <= 4; ++q) {
        for (int p = q; p + q <= 8; ++p) {
          const auto longer = attach_two_paths(b.g, b.u, b.v, static_cast<std::size_t>(p + 1), static_cast<std::size_t>(q - 1));
          const auto balanced = attach_two_paths(b.g, b.u, b.v, static_cast<std::size_t>(p), static_cast<std::size_t>(q));
          report.cases.push_back(strict_case(b.name + " (" + std::to_string(p) + "," + std::to_string(q) + ")",
                                             spectral_radius(longer, o), spectral_radius(balanced, o)));
        }
      }
    }
  }
  return report;
}

SuiteReport verify_reduction(const SpectralOptions& opts) {
  SuiteReport report{"lemma4", {}};
  struct Instance {
    std::string label;
    Hypergraph g;
  };
  std::vector<Instance> instances;
  auto add = [&](const std::string& family, int pad = 0) {
    auto g = expand(parse_family(family));
    if (pad) g = pad_edges(g, pad);
    instances.push_back({with_pad(family, pad), std::move(g)});
  };
  for (int k = 3; k <= 6; ++k) {
    const auto ks = std::to_string(k);
    for (int m : {1, 2, 4, 7, 10}) add("P:" + ks + "," + std::to_string(m));
    for (int m : {3, 5, 8}) add("D:" + ks + "," + std::to_string(m));
    if (k >= 4) {
      for (int m : {4, 6, 9}) add("Dp:" + ks + "," + std::to_string(m));
    }
  }
  for (int pad = 0; pad <= 3; ++pad) {
    add("E3:1,2,2", pad);
    add("E3:1,1,3", pad);
    add("F3:0,2,3", pad);
  }
  for (int pad = 1; pad <= 3; ++pad) {
    add("F3:1,1,2", pad);
    add("G3:1,1,0,1,3", pad);
    add("G3:1,2,1,1,1", pad);
  }

  constexpr double kRelTol = 1e-8;
  for (const auto& inst : instances) {
    CaseResult c;
    c.label = inst.label;
    if (!is_reducible(inst.g)) {
      c.detail = "not reducible";
      report.cases.push_back(std::move(c));
      continue;
    }
    const auto reduced = reduce(inst.g);
    const auto a = spectral_radius(inst.g, opts);
    const auto b = spectral_radius(reduced, opts);
    const double lhs = std::pow(a.rho, inst.g.k());
    const double rhs = std::pow(b.rho, reduced.k());
    const double rel = std::abs(lhs - rhs) / rhs;
    c.margin = kRelTol - rel;
    c.passed = a.converged && b.converged && rel <= kRelTol;
    c.detail = "rho^k=" + fmt_double(lhs) + " rho'^(k-1)=" + fmt_double(rhs) + " rel=" + fmt_double(rel);
    report.cases.push_back(std::move(c));
  }
  return report;
}

SuiteReport verify_rayleigh(const SpectralOptions& opts) {
  SuiteReport report{"rayleigh", {}};
  const std::vector<std::string> names{"P:2,6", "P:3,4",  "P:5,3",  "C:3,3",       "C:2,5",  "D:2,6",
                                       "D:4,5", "Dp:3,6", "Dp:5,4", "E3:1,2,3",    "F3:2,2,2", "G3:1,1,1,1,3",
                                       "H4:2",  "H4:4",   "TE:5,3", "TE:3,2"};
  std::mt19937 rng(20240517);
  std::uniform_real_distribution<double> dist(0.1, 2.0);
  for (const auto& name : names) {
    const auto g = expand(parse_family(name));
    std::vector<double> x(g.n());
    for (auto& v : x) v = dist(rng);

    const auto ax = apply_adjacency(g, x);
    double quad = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) quad += x[i] * ax[i];
    const double edgewise = rayleigh(g, x);
    const double rel = std::abs(quad - edgewise) / std::abs(edgewise);
    report.cases.push_back({name + " identity", rel <= 1e-12, 1e-12 - rel, "rel=" + fmt_double(rel)});

    std::vector<double> gathered(g.n());
    AdjacencyOperator(g).apply(x, gathered);
    double diff = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) diff = std::max(diff, std::abs(gathered[i] - ax[i]) / std::max(1.0, std::abs(ax[i])));
    report.cases.push_back({name + " kernels agree", diff <= 1e-12, 1e-12 - diff, "max rel diff=" + fmt_double(diff)});

    double norm = 0.0;
    for (double v : x) norm += std::pow(v, g.k());
    for (auto& v : x) v /= std::pow(norm, 1.0 / g.k());
    const auto r = spectral_radius(g, opts);
    const double bound = r.rho + opts.tol;
    const double value = rayleigh(g, x);
    report.cases.push_back({name + " rayleigh <= rho", value <= bound, bound - value,
                            fmt_double(value) + " <= " + fmt_double(r.rho)});
  }
  return report;
}

double scaled_poly_residual(const std::vector<double>& coeffs, double value) {
  double lo = poly_residual(coeffs, value - 0.1), hi = lo;
  constexpr int kSamples = 200;
  for (int i = 1; i <= kSamples; ++i) {
    const double f = poly_residual(coeffs, value - 0.1 + 0.2 * i / kSamples);
    lo = std::min(lo, f);
    hi = std::max(hi, f);
  }
  return std::abs(poly_residual(coeffs, value)) / (hi - lo);
}

SuiteReport verify_polys(const SpectralOptions& opts) {
  SuiteReport report{"polys", {}};
  struct Poly {
    int t;
    std::vector<double> coeffs;
    bool in_fourth_power;  // polynomial variable is rho^4 rather than rho
    double published_floor;    // published lower bound on that variable
    int d_edges;           // m of the D^(4) hypergraph it is compared with
  };
  const std::vector<Poly> polys{{1, {1, -1, 0, 0, -1}, false, 1.38, 5},
                                {2, {1, -6, 10, -7, 2}, true, 3.8, 6},
                                {3, {1, -7, 15, -13, 6, -1}, true, 3.9, 7},
                                {4, {1, -8, 21, -23, 13, -3}, true, 3.9, 8}};
  constexpr double kLimit = 1e-6;
  for (const auto& p : polys) {
    const auto g = h4_family(p.t);
    const auto r = spectral_radius(g, tight(opts));
    const double var = p.in_fourth_power ? std::pow(r.rho, 4) : r.rho;
    const double scaled = scaled_poly_residual(p.coeffs, var);
    const auto label = "H4:" + std::to_string(p.t);
    report.cases.push_back({label + " characteristic polynomial", r.converged && scaled < kLimit, kLimit - scaled,
                            (p.in_fourth_power ? "rho^4=" : "rho=") + fmt_double(var) + " scaled |f|=" + fmt_double(scaled)});
    report.cases.push_back({label + " exceeds " + fmt_double(p.published_floor), var > p.published_floor, var - p.published_floor,
                            fmt_double(var)});
    const auto d = spectral_radius(d_family(4, p.d_edges), tight(opts));
    report.cases.push_back(strict_case(label + " > D:4," + std::to_string(p.d_edges), d, r));
    if (p.t == 4) {
      const double margin = std::min(var - 3.9, 4.0 - var);
      report.cases.push_back({label + " rho^4 in (3.9, 4)", margin > 0.0, margin, fmt_double(var)});
    }
  }
  return report;
}

double decimal_match_margin(double value, double printed, int decimals) {
  return 0.5 * std::pow(10.0, -decimals) - std::abs(value - printed);
}

SuiteReport verify_tables(const SpectralOptions& opts) {
  SuiteReport report{"tables", {}};
  auto add = [&](std::string label, double value, double printed, int decimals) {
    const double margin = decimal_match_margin(value, printed, decimals);
    report.cases.push_back({std::move(label), margin >= 0.0, margin,
                            "computed " + fmt_double(value) + " vs printed " + fmt_double(printed)});
  };
  const double graph_values[] = {1.902, 1.932, 1.950, 1.962};
  for (int m = 5; m <= 8; ++m) {
    add("rho(D:2," + std::to_string(m) + ")", spectral_radius(d_family(2, m), opts).rho, graph_values[m - 5], 3);
  }
  add("rho(D:4,5)", spectral_radius(d_family(4, 5), opts).rho, 1.3791, 4);
  const double fourth_powers[] = {3.733, 3.8025, 3.8494};
  const int decimals[] = {3, 4, 4};
  for (int m = 6; m <= 8; ++m) {
    add("rho(D:4," + std::to_string(m) + ")^4", std::pow(spectral_radius(d_family(4, m), opts).rho, 4),
        fourth_powers[m - 6], decimals[m - 6]);
  }
  // rho(D_8^(4)) = rho(D_8^(2))^(1/2) through two reductions.
  const double direct = spectral_radius(d_family(4, 8), opts).rho;
  const double chained = std::sqrt(spectral_radius(d_family(2, 8), opts).rho);
  const double rel = std::abs(direct - chained) / chained;
  report.cases.push_back({"rho(D:4,8) = rho(D:2,8)^(1/2)", rel <= 1e-8, 1e-8 - rel, "rel=" + fmt_double(rel)});
  return report;
}

}  // namespace hyperspec
