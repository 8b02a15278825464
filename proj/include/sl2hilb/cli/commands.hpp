#pragma once

// Subcommands of the sl2hilb tool. run_cli does no process-level I/O of its
// own, so tests can drive it with string streams.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "sl2hilb/repmodel.hpp"

namespace sl2hilb::cli {

enum ExitCode : int { kExitOk = 0, kExitVerifyFailed = 1, kExitUsage = 2, kExitInternal = 3 };

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct VerifyOptions {
  int max_degree = 30;
  int draws = 20;
  std::uint64_t seed = 1;
  unsigned threads = 1;
};

struct VerifyCheck {
  std::string name;
  bool ok = true;
  std::string detail;  // summary on success, first counterexample on failure
};

/// Oracle comparison, degree, pole order, closed form against series,
/// functional equation, perturbed-sum identities and, for representations in
/// the shipped table, the reference row.
std::vector<VerifyCheck> verify_representation(const repmodel::Representation& rep, const VerifyOptions& options);

}  // namespace sl2hilb::cli
