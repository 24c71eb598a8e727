#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "stacksort/error.hpp"
#include "stacksort/lab.hpp"
#include "stacksort/patterns.hpp"
#include "stacksort/permutation.hpp"

namespace stacksort::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitResource = 3;
inline constexpr int kExitVerificationFailed = 4;

class UsageError : public Error {
 public:
  using Error::Error;
};

// --help anywhere; carries the rendered help text.
class HelpRequested : public Error {
 public:
  using Error::Error;
};

enum class Command {
  sort, trace, stats, characterize, preimage, lift, zeta, xi, bijection, count_image, verify, explore
};
enum class OutputFormat { plain, csv, jsonl };

std::string to_string(Command c);

struct CommandPlan {
  Command command = Command::sort;
  std::optional<Permutation> permutation;
  std::optional<SetPartition> partition;  // bijection given a partition
  std::size_t iterations = 1;             // sort
  std::optional<std::size_t> t;
  std::optional<std::size_t> n;
  std::optional<std::size_t> m;
  std::optional<std::size_t> l;
  std::optional<std::size_t> n_max;
  std::string claim;  // verify: a Claim name or "all"

  OutputFormat format = OutputFormat::plain;
  bool compact = false;
  bool keep_elements = false;
  bool timing = false;
  std::size_t max_n = kDefaultMaxN;
  std::size_t shards = 1;
  std::size_t memory_cap = 0;

  EnumerationOptions enumeration() const;
};

/// `args` excludes the program name. `env_max_n` is the value of
/// STACKSORT_MAX_N, if set; an explicit --max-n wins over it.
/// Throws UsageError, ParseError, or HelpRequested.
CommandPlan parse_args(std::span<const std::string> args,
                       std::optional<std::string> env_max_n = std::nullopt);

/// Runs a validated plan. Returns kExitVerificationFailed when any
/// verification report fails; library errors propagate.
int execute(const CommandPlan& plan, std::ostream& out, std::ostream& err);

/// parse_args + execute with errors mapped to exit codes and reported on `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err,
        std::optional<std::string> env_max_n = std::nullopt);

}  // namespace stacksort::cli
