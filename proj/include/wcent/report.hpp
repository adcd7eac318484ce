#pragma once

// Orchestration of verification runs and their reports. Used by the wcent
// command-line tool and the Python bindings.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wcent/centralizer.hpp"
#include "wcent/pva.hpp"
#include "wcent/serialize.hpp"

namespace wcent {

enum class Command {
  Basis,
  Generators,
  CheckMembership,
  Miura,
  Jacobian,
  SsVectors,
  VerifyCenter,
  VerifyIso,
  PvaAxioms
};

enum class Format { Text, Json, Latex };

/// Seed used when neither --seed nor WCENT_SEED is given.
inline constexpr std::uint64_t kDefaultSeed = 0;

std::optional<Command> parse_command(std::string_view name);
std::string_view command_name(Command c);

struct RunConfig {
  std::vector<Partition> partitions;  // one entry, or a sweep
  Command command = Command::Generators;
  MembershipMode mode = MembershipMode::FullBasis;
  std::uint64_t seed = kDefaultSeed;
  Format format = Format::Text;
  int trials = 100;                   // pva-axioms
  std::optional<Json> input;          // check-membership on a given polynomial
  bool timings = false;
};

/// Outcome of one run. Failed checks carry their witnesses inside `body`.
struct Report {
  enum class Status { Pass, Fail, Retry };
  Status status = Status::Pass;
  Json body;
  std::vector<std::string> text;
  std::vector<std::string> latex;

  int exit_code() const { return status == Status::Pass ? 0 : 1; }
  std::string render(Format f) const;
};

Report dispatch(const RunConfig& cfg);

}  // namespace wcent
