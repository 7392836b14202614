#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ssfem::cli {

enum class Format { text, json, csv };

struct RunConfig {
  std::string command;  // count, partition, verify, unisolvence, continuity, export
  int dim = 2;
  int smoothness = 1;
  std::optional<int> degree;
  std::optional<std::vector<int>> profile;
  std::uint64_t seed = 1;
  int samples = 50;
  Format format = Format::text;
  std::optional<std::string> output;
};

inline constexpr int kExitPass = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

// Runs one command. Reports go to `out` (or the output file), diagnostics to
// `err`. Returns 0 on pass, 1 on a verification failure, 2 on bad input.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses argv with the subcommand layout of the ssfem tool, then runs it.
int main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace ssfem::cli
