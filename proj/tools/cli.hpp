#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>

namespace hyperspec::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kUsage = 2,
  kNotConverged = 3,
  kDisconnected = 4,
  kNotReducible = 5,
  kCapExceeded = 6,
};

struct RunConfig {
  double tolerance = 1e-10;
  std::size_t max_iter = 1'000'000;
  std::size_t max_n = 16;
  std::string output;  // empty: standard output
  std::string format = "json";
};

/// Entry point shared by the executable and the tests. Diagnostics go to
/// `err`; results go to `out` unless --out redirects them.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hyperspec::cli
