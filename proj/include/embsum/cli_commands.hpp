#pragma once

// Subcommands of the `embsum` executable. Every command writes one JSON
// document to `out` and diagnostics to `err`; equal inputs and seeds give
// byte-identical output.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "embsum/verify_suites.hpp"

namespace embsum::cli {

enum ExitCode : int { kPass = 0, kFail = 1, kUsage = 2, kGeometry = 3 };

int cmd_verify(const std::string& suite, const verify::RunConfig& cfg, std::ostream& out,
               const std::optional<std::string>& report_path = std::nullopt);

struct ResolveArgs {
  std::string input;
  std::string output;
  std::optional<std::string> svg;
};
int cmd_resolve(const ResolveArgs& args, const verify::RunConfig& cfg, std::ostream& out);

struct BoundArgs {
  std::vector<long long> class1;
  std::vector<long long> class2;
  long long a = 1;
  long long b = 1;
  bool orientable = true;
  bool sigma1 = false;
  bool sigma2 = false;
  std::optional<std::string> graph;  // abstract graph instance instead of classes
};
int cmd_bound(const BoundArgs& args, std::ostream& out);

struct SampleArgs {
  std::string model;  // V, tildeV, W2, W0
  std::size_t n = 1000;
  std::string out;    // .csv or .json
  double param_re = 0.0;  // g for W2, z for W0
  double param_im = 0.0;
  bool boundary = false;  // tildeV: sample |x| + |y| = 1 only
};
int cmd_sample(const SampleArgs& args, const verify::RunConfig& cfg, std::ostream& out);

// Parses argv and dispatches. Usage errors exit 2, geometric rejections 3.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace embsum::cli
