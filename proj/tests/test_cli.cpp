#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "hyperspec/families.hpp"
#include "hyperspec/hypergraph.hpp"
#include "hyperspec/transforms.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;
using namespace hyperspec;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "hyperspec");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<json> json_lines(const std::string& text) {
  std::vector<json> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (!line.empty()) lines.push_back(json::parse(line));
  }
  return lines;
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "hyperspec_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

void write_text(const fs::path& path, const std::string& text) { std::ofstream(path, std::ios::binary) << text; }

std::string read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_CASE("gen writes the normalized file format") {
  const auto r = invoke({"gen", "P:3,2"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out == "3 5 2\n0 1 2\n2 3 4\n");
  CHECK(invoke({"gen", "H4:5"}).code == cli::kUsage);
  CHECK(invoke({"gen", "Q:1"}).code == cli::kUsage);
}

TEST_CASE("rho reports bounds and an eigenvector") {
  const auto r = invoke({"rho", "--family", "P:3,2"});
  REQUIRE(r.code == cli::kOk);
  const auto j = json::parse(r.out);
  CHECK(std::abs(j["rho"].get<double>() - std::cbrt(2.0)) <= 1e-9);
  CHECK(j["lower"].get<double>() <= j["rho"].get<double>());
  CHECK(j["rho"].get<double>() <= j["upper"].get<double>());
  CHECK(j["eigenvector"].size() == 5);
  CHECK(j["k"] == 3);
  CHECK(j["n"] == 5);
  CHECK(j["m"] == 2);
  CHECK(j["residual"].get<double>() <= 1e-8);
}

TEST_CASE("rho of a generated file equals rho of the family string") {
  const auto path = scratch("d35.hg");
  const auto gen = invoke({"gen", "D:3,5"});
  REQUIRE(gen.code == cli::kOk);
  write_text(path, gen.out);
  const auto a = invoke({"rho", path.string()});
  const auto b = invoke({"rho", "--family", "D:3,5"});
  REQUIRE(a.code == cli::kOk);
  CHECK(a.out == b.out);
  // Output is deterministic run to run.
  CHECK(invoke({"rho", path.string()}).out == a.out);
}

TEST_CASE("rho text format") {
  const auto r = invoke({"--format", "text", "rho", "--family", "TE:3,2"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.find("rho = 1.587401") != std::string::npos);
}

TEST_CASE("rho exit codes") {
  const auto bad = scratch("disconnected.hg");
  write_text(bad, "3 6 2\n0 1 2\n3 4 5\n");
  CHECK(invoke({"rho", bad.string()}).code == cli::kDisconnected);

  const auto malformed = scratch("malformed.hg");
  write_text(malformed, "3 5 2\n0 1 2\n");
  CHECK(invoke({"rho", malformed.string()}).code == cli::kUsage);
  CHECK(invoke({"rho", scratch("missing.hg").string()}).code == cli::kUsage);
  CHECK(invoke({"rho"}).code == cli::kUsage);
  CHECK(invoke({"rho", bad.string(), "--family", "P:3,2"}).code == cli::kUsage);

  const auto slow = invoke({"--max-iter", "2", "--tol", "1e-14", "rho", "--family", "P:3,8"});
  CHECK(slow.code == cli::kNotConverged);
  CHECK(json::parse(slow.out)["iterations"] == 2);

  CHECK(invoke({"--tol", "0", "rho", "--family", "P:3,2"}).code == cli::kUsage);
  CHECK(invoke({"--format", "xml", "rho", "--family", "P:3,2"}).code == cli::kUsage);
  CHECK(invoke({}).code == cli::kUsage);
  CHECK(invoke({"frobnicate"}).code == cli::kUsage);
}

TEST_CASE("reduce") {
  const auto r = invoke({"reduce", "--family", "P:4,3"});
  REQUIRE(r.code == cli::kOk);
  const auto j = json::parse(r.out);
  CHECK(j["k"] == 4);
  CHECK(j["reduced_k"] == 3);
  CHECK(j["identity_residual"].get<double>() <= 1e-8);
  CHECK(parse(j["reduced"].get<std::string>()) == loose_path(3, 3));

  CHECK(invoke({"reduce", "--family", "H4:1"}).code == cli::kNotReducible);
  CHECK(invoke({"reduce", "--family", "P:2,3"}).code == cli::kNotReducible);

  const auto path = scratch("reduced.hg");
  fs::remove(path);
  CHECK(invoke({"--out", path.string(), "reduce", "--family", "Dp:4,5"}).code == cli::kOk);
  CHECK(read_text(path) == serialize(reduce(d_prime_family(4, 5))));
}

TEST_CASE("enum prints one line per class and a summary") {
  const auto r = invoke({"enum", "--k", "3", "--m", "3"});
  REQUIRE(r.code == cli::kOk);
  const auto lines = json_lines(r.out);
  REQUIRE(lines.size() >= 3);
  const auto& summary = lines.back();
  CHECK(summary["summary"] == true);
  CHECK(summary["total_count"] == lines.size() - 1);
  CHECK(summary["min"]["family"] == "P:3,3");
  CHECK(summary["second"]["family"] == "D:3,3");
  CHECK(summary["min_certified"] == true);
  CHECK(summary["second_certified"] == true);
  for (std::size_t i = 0; i + 1 < lines.size(); ++i) {
    CHECK(lines[i]["edges"].size() == 3);
    CHECK(lines[i]["lower"].get<double>() <= lines[i]["upper"].get<double>());
  }
}

TEST_CASE("enum with a single class has no second") {
  const auto lines = json_lines(invoke({"enum", "--k", "2", "--m", "2"}).out);
  REQUIRE(lines.size() == 2);
  CHECK(lines.back()["second"].is_null());
  CHECK(lines.back()["second_certified"] == false);
}

TEST_CASE("vertex cap from flag and environment") {
  CHECK(invoke({"enum", "--k", "3", "--m", "8"}).code == cli::kCapExceeded);
  CHECK(invoke({"--max-n", "6", "enum", "--k", "3", "--m", "3"}).code == cli::kCapExceeded);

  ::setenv("HYPERSPEC_MAX_N", "6", 1);
  CHECK(invoke({"enum", "--k", "3", "--m", "3"}).code == cli::kCapExceeded);
  // The flag wins over the environment.
  CHECK(invoke({"--max-n", "7", "enum", "--k", "3", "--m", "3"}).code == cli::kOk);
  ::setenv("HYPERSPEC_MAX_N", "lots", 1);
  CHECK(invoke({"enum", "--k", "3", "--m", "2"}).code == cli::kUsage);
  ::unsetenv("HYPERSPEC_MAX_N");
  CHECK(invoke({"enum", "--k", "3", "--m", "3"}).code == cli::kOk);
}

TEST_CASE("verify") {
  const auto r = invoke({"verify", "polys"});
  CHECK(r.code == cli::kOk);
  const auto lines = json_lines(r.out);
  REQUIRE(!lines.empty());
  CHECK(lines.back()["suite"] == "polys");
  CHECK(lines.back()["passed"] == true);
  CHECK(lines.back()["cases"] == lines.size() - 1);

  const auto text = invoke({"--format", "text", "verify", "rayleigh"});
  CHECK(text.code == cli::kOk);
  CHECK(text.out.rfind("PASS ", 0) == 0);
  CHECK(text.out.find("FAIL ") == std::string::npos);

  CHECK(invoke({"verify", "nonsense"}).code == cli::kUsage);
}

TEST_CASE("--out writes the result to a file") {
  const auto path = scratch("rho.json");
  fs::remove(path);
  const auto r = invoke({"--out", path.string(), "rho", "--family", "C:3,3"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.empty());
  const auto j = json::parse(read_text(path));
  CHECK(std::abs(j["rho"].get<double>() - std::cbrt(4.0)) <= 1e-9);
}
