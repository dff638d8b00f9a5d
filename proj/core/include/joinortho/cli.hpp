#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "joinortho/compat.hpp"
#include "joinortho/enumeration.hpp"
#include "joinortho/tuples.hpp"

namespace joinortho::cli {

enum class Command { Classify, Witness, Enumerate, VerifyChain, GapHunt, Table };
enum class OutputFormat { Text, Json, Csv };

struct RunConfig {
    Command command = Command::Classify;
    std::optional<IntTuple> m;
    std::optional<IntTuple> n;
    PairBounds bounds;
    std::uint64_t budget = kDefaultBudget;
    OutputFormat format = OutputFormat::Text;
    int jobs = 0;  // 0: all hardware threads
    std::string table_id;
};

inline constexpr int kExitYes = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitUnknown = 2;
inline constexpr int kExitUsage = 64;

/* Executes one command against the given streams.  All machine output is
 * deterministic: re-running the same config reproduces the bytes, whatever
 * the job count. */
int run_command(const RunConfig& config, std::ostream& out, std::ostream& err);

// argv-style front end (argument parsing plus run_command)
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int cli_main(int argc, const char* const* argv);

} // namespace joinortho::cli
