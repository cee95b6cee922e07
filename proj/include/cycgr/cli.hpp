#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cycgr/execution.hpp"

namespace cycgr::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // a check or verification failed
inline constexpr int kExitUsage = 2;

/// Runs the command line tool. args[0] is the program name.
///
///   classify  --p P [--orbits S,..] [--fixed M] [--json] [--evidence DIR]
///   construct --p P [--orbits S,..] [--fixed M] [--out FILE] [--dot FILE] [--verify]
///   aut       GRAPH.json [--bruteforce]
///   closure   --p P [--orbits S,..] [--fixed M]
///   oracle    --p P [--orbits S,..] [--fixed M] --max-colors K [--budget N] [--parallel]
///   verify-all [--serial]
///
/// Every randomized step takes --seed (default fixed).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

struct TableEntry {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// The built-in check table behind verify-all, in a fixed order. Entries run
/// concurrently under Execution::parallel; the result order does not change.
std::vector<TableEntry> verification_table(Execution exec = Execution::parallel);

}  // namespace cycgr::cli
