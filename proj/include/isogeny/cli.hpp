#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "isogeny/arith.hpp"

namespace iso {

struct CommandSpec {
  std::string subcommand;  // enumerate, count, localcounts, constants, verify
  std::optional<int> m;
  Int bound = 0;           // --max-twht or --max-height
  bool equipped = false;
  bool rational = false;
  std::optional<Int> e, e1, e2;
  std::uint64_t euler_bound = 1'000'000;
  std::uint64_t mc_samples = 0;
  std::uint64_t seed = 1;
  Int ell0_truncation = 0;
  std::string suite = "all";
  std::string data_dir;
  std::string format = "csv";
  std::string output;      // empty: stdout
  int threads = 1;
  bool error_json = false;
};

enum ExitCode { kExitOk = 0, kExitFailure = 1, kExitUsage = 2 };

// parses argv; usage problems come back as kExitUsage with the message in err
int parse_command(int argc, const char* const* argv, CommandSpec& cmd, std::ostream& out,
                  std::ostream& err);
int run(const CommandSpec& cmd, std::ostream& out, std::ostream& err);
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace iso
