#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "hyperspec/canonical.hpp"
#include "hyperspec/enumerate.hpp"
#include "hyperspec/families.hpp"
#include "hyperspec/hypergraph.hpp"
#include "hyperspec/spectral.hpp"
#include "hyperspec/transforms.hpp"
#include "hyperspec/verify.hpp"
#include "json_writer.hpp"

namespace hyperspec::cli {
namespace {

// Usage-level failure detected after CLI11 parsing (bad family string, bad
// environment value, missing source).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Source {
  std::string path;
  std::string family;
};

Hypergraph load(const Source& src) {
  if (!src.family.empty() && !src.path.empty()) throw UsageError("give either a file or --family, not both");
  if (!src.family.empty()) {
    try {
      return expand(parse_family(src.family));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  if (src.path.empty()) throw UsageError("no input: pass a .hg file or --family");
  return read_file(src.path);
}

SpectralOptions spectral(const RunConfig& cfg) { return {cfg.tolerance, cfg.max_iter}; }

std::string g17(double v) { return fmt::format("{:.17g}", v); }

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.output, std::ios::binary);
  if (!file) throw UsageError("cannot write " + cfg.output);
  file << text;
}

std::string render_eigen(const Hypergraph& g, const EigenResult& r, const std::string& format) {
  if (format == "text") {
    std::string s = fmt::format("k = {}\nn = {}\nm = {}\nrho = {}\nlower = {}\nupper = {}\niterations = {}\nresidual = {}\n",
                                g.k(), g.n(), g.m(), g17(r.rho), g17(r.lower), g17(r.upper), r.iterations, g17(r.residual));
    s += "eigenvector =";
    for (double v : r.x) s += ' ' + g17(v);
    return s + '\n';
  }
  JsonWriter w;
  w.begin_object()
      .field("rho", r.rho)
      .field("lower", r.lower)
      .field("upper", r.upper)
      .field("iterations", static_cast<std::uint64_t>(r.iterations))
      .field("residual", r.residual);
  w.key("eigenvector").array(r.x);
  w.field("k", g.k()).field("n", static_cast<std::uint64_t>(g.n())).field("m", static_cast<std::uint64_t>(g.m()));
  w.end_object();
  return w.str() + '\n';
}

int cmd_rho(const Source& src, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto g = load(src);
  const auto r = spectral_radius(g, spectral(cfg));
  emit(cfg, render_eigen(g, r, cfg.format), out);
  if (!r.converged) {
    err << "error: no convergence within " << cfg.max_iter << " iterations; bounds [" << g17(r.lower) << ", "
        << g17(r.upper) << "]\n";
    return kNotConverged;
  }
  return kOk;
}

int cmd_gen(const std::string& family, const RunConfig& cfg, std::ostream& out) {
  Hypergraph g = [&] {
    try {
      return expand(parse_family(family));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();
  emit(cfg, serialize(g), out);
  return kOk;
}

int cmd_reduce(const Source& src, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto g = load(src);
  const auto reduced = reduce(g);
  const auto a = spectral_radius(g, spectral(cfg));
  const auto b = spectral_radius(reduced, spectral(cfg));
  const double residual = std::abs(std::pow(a.rho, g.k()) - std::pow(b.rho, reduced.k()));
  if (!cfg.output.empty()) write_file(reduced, cfg.output);

  if (cfg.format == "text") {
    out << fmt::format("rho({}-uniform) = {}\nrho({}-uniform reduced) = {}\nidentity residual = {}\n", g.k(), g17(a.rho),
                       reduced.k(), g17(b.rho), g17(residual));
    if (cfg.output.empty()) out << serialize(reduced);
  } else {
    JsonWriter w;
    w.begin_object()
        .field("k", g.k())
        .field("rho", a.rho)
        .field("reduced_k", reduced.k())
        .field("rho_reduced", b.rho)
        .field("identity_residual", residual)
        .field("reduced", serialize(reduced))
        .end_object();
    out << w.str() << '\n';
  }
  if (!a.converged || !b.converged) {
    err << "error: spectral iteration did not converge\n";
    return kNotConverged;
  }
  return kOk;
}

void class_summary(JsonWriter& w, const RankedClass& c) {
  w.begin_object().field("canonical", c.canonical.bytes());
  if (auto name = identify(c.graph)) {
    w.field("family", *name);
  } else {
    w.key("family").null();
  }
  w.field("rho", c.eigen.rho).field("lower", c.eigen.lower).field("upper", c.eigen.upper).end_object();
}

int cmd_enum(int k, int m, const RunConfig& cfg, std::ostream& out) {
  RankOptions opts;
  opts.spectral = spectral(cfg);
  opts.enumeration.max_n = cfg.max_n;
  const auto report = rank_by_rho(k, m, opts);

  std::string text;
  std::size_t ties = 0;
  for (const auto& c : report.classes) ties += c.tied_with_next ? 1 : 0;

  if (cfg.format == "text") {
    text += fmt::format("k={} m={} classes={}\n", k, m, report.total_count);
    for (std::size_t i = 0; i < report.classes.size(); ++i) {
      const auto& c = report.classes[i];
      text += fmt::format("{:>4} {:<24} [{}, {}]{}  {}\n", i, g17(c.eigen.rho), g17(c.eigen.lower), g17(c.eigen.upper),
                          c.tied_with_next ? " tie" : "", c.canonical.bytes());
    }
    auto name = [&](std::size_t i) { return identify(report.classes[i].graph).value_or(report.classes[i].canonical.bytes()); };
    text += "min: " + name(0) + (report.minimum_certified() ? " (certified)\n" : " (not certified)\n");
    if (report.classes.size() > 1) {
      text += "second: " + name(1) + (report.second_certified() ? " (certified)\n" : " (not certified)\n");
    }
  } else {
    for (const auto& c : report.classes) {
      JsonWriter w;
      w.begin_object().field("canonical", c.canonical.bytes());
      w.key("edges").begin_array();
      for (const auto& e : c.graph.edges()) {
        w.begin_array();
        for (Vertex v : e) w.value(static_cast<std::uint64_t>(v));
        w.end_array();
      }
      w.end_array();
      w.field("rho", c.eigen.rho).field("lower", c.eigen.lower).field("upper", c.eigen.upper).end_object();
      text += w.str() + '\n';
    }
    JsonWriter w;
    w.begin_object()
        .field("summary", true)
        .field("k", k)
        .field("m", m)
        .field("total_count", static_cast<std::uint64_t>(report.total_count))
        .field("ties", static_cast<std::uint64_t>(ties));
    w.key("min");
    class_summary(w, report.classes[0]);
    w.key("second");
    if (report.classes.size() > 1) {
      class_summary(w, report.classes[1]);
    } else {
      w.null();
    }
    w.field("min_certified", report.minimum_certified()).field("second_certified", report.second_certified()).end_object();
    text += w.str() + '\n';
  }
  emit(cfg, text, out);
  return kOk;
}

int cmd_verify(const std::string& suite, const RunConfig& cfg, std::ostream& out) {
  const auto known = suite_names();
  if (std::find(known.begin(), known.end(), suite) == known.end()) {
    throw UsageError("unknown suite '" + suite + "'");
  }
  const auto report = run_suite(suite, spectral(cfg));
  std::string text;
  for (const auto& c : report.cases) {
    if (cfg.format == "text") {
      text += fmt::format("{} {}  margin={}  {}\n", c.passed ? "PASS" : "FAIL", c.label, g17(c.margin), c.detail);
    } else {
      JsonWriter w;
      w.begin_object()
          .field("label", c.label)
          .field("passed", c.passed)
          .field("margin", c.margin)
          .field("detail", c.detail)
          .end_object();
      text += w.str() + '\n';
    }
  }
  if (cfg.format == "text") {
    text += fmt::format("{}: {} of {} cases passed\n", report.name, report.cases.size() - report.failures(), report.cases.size());
  } else {
    JsonWriter w;
    w.begin_object()
        .field("suite", report.name)
        .field("passed", report.passed())
        .field("cases", static_cast<std::uint64_t>(report.cases.size()))
        .field("failures", static_cast<std::uint64_t>(report.failures()))
        .end_object();
    text += w.str() + '\n';
  }
  emit(cfg, text, out);
  return report.passed() ? kOk : kCheckFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral radii of uniform hypergraphs", "hyperspec"};
  app.require_subcommand(1);

  RunConfig cfg;
  bool max_n_given = false;
  app.add_option("--tol", cfg.tolerance, "Certified bound gap at which iteration stops")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-iter", cfg.max_iter, "Iteration limit")->check(CLI::Range(std::size_t{1}, std::size_t(-1) >> 1));
  app.add_option_function<std::size_t>(
      "--max-n",
      [&](std::size_t v) {
        cfg.max_n = v;
        max_n_given = true;
      },
      "Vertex cap for canonical forms and enumeration (env HYPERSPEC_MAX_N)");
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--out", cfg.output, "Write output to this path");

  Source src;
  auto* rho = app.add_subcommand("rho", "Spectral radius of a hypergraph");
  rho->add_option("source", src.path, ".hg file");
  rho->add_option("--family", src.family, "Family string, e.g. P:3,2");

  std::string family;
  auto* gen = app.add_subcommand("gen", "Write a family member as .hg");
  gen->add_option("family", family, "Family string")->required();

  auto* red = app.add_subcommand("reduce", "Delete one pendant vertex per edge");
  red->add_option("source", src.path, ".hg file");
  red->add_option("--family", src.family, "Family string");

  int k = 0, m = 0;
  auto* en = app.add_subcommand("enum", "Rank all connected k-uniform hypergraphs with m edges");
  en->add_option("--k", k, "Edge size")->required()->check(CLI::Range(2, 64));
  en->add_option("--m", m, "Edge count")->required()->check(CLI::Range(1, 1 << 20));

  std::string suite;
  auto* ver = app.add_subcommand("verify", "Run a verification suite");
  ver->add_option("suite", suite, "lemma1|lemma3|lemmaTh1|lemma4|rayleigh|polys|tables")->required();

  for (auto* sub : {rho, gen, red, en, ver}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (!max_n_given) {
      if (const char* env = std::getenv("HYPERSPEC_MAX_N"); env && *env) {
        std::size_t v = 0;
        std::istringstream in(env);
        if (!(in >> v) || !in.eof() || v == 0) throw UsageError(std::string("bad HYPERSPEC_MAX_N '") + env + "'");
        cfg.max_n = v;
      }
    }
    if (*rho) return cmd_rho(src, cfg, out, err);
    if (*gen) return cmd_gen(family, cfg, out);
    if (*red) return cmd_reduce(src, cfg, out, err);
    if (*en) return cmd_enum(k, m, cfg, out);
    if (*ver) return cmd_verify(suite, cfg, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DisconnectedError& e) {
    err << "error: " << e.what() << '\n';
    return kDisconnected;
  } catch (const NotReducibleError& e) {
    err << "error: " << e.what() << '\n';
    return kNotReducible;
  } catch (const CapExceededError& e) {
    err << "error: " << e.what() << '\n';
    return kCapExceeded;
  }
  return kUsage;
}

}  // namespace hyperspec::cli
