#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hookcomm/exact_matrix.hpp"
#include "hookcomm/oracle.hpp"
#include "hookcomm/partition.hpp"

namespace hookcomm::cli {

enum class Command { decide, enumerate, witness, jordan, table, generic, oracle };
enum class Format { text, json };

// Process exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kDoesNotCommute = 1;
inline constexpr int kInputError = 2;
inline constexpr int kInternalError = 3;

struct CliConfig {
    Command command = Command::decide;
    std::optional<std::pair<int, int>> hook;
    std::optional<Partition> q;
    std::optional<Partition> p;
    std::optional<int> total;
    std::optional<std::string> matrix_path;
    std::optional<std::string> out_path;
    std::optional<char> case_tag;
    std::optional<int> k;
    int trials = 20;
    std::uint64_t seed = 1;
    int bound = 10;
    RankMode mode = RankMode::automatic;
    std::vector<Rational> grid{-1, 0, 1};
    std::uint64_t max_points = 2'000'000;
    int max_n = 25;
    Format format = Format::text;
    bool exclude_universal = false;
    bool include_universal = false;
};

/// Comma-separated integers, e.g. "3,2,1"; sorted into a partition.
Partition parse_partition_arg(const std::string& text);

/// "n,m".
std::pair<int, int> parse_hook_arg(const std::string& text);

/// Throws InvalidInput when a command's required arguments are missing.
void validate(const CliConfig& config);

/// Executes a validated configuration and returns the exit status.
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (HOOKCOMM_MAX_N in the environment sets the default
/// enumeration bound), runs it and maps errors to exit statuses, printing a
/// single "error: <kind>: <message>" line to err.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hookcomm::cli
