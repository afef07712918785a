#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "locmem/instance.hpp"

namespace locmem::cli {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 2;
constexpr int kExitBudget = 3;

constexpr std::uint64_t kDefaultBudget = 100'000'000;

struct Options {
    std::string command;
    std::optional<std::string> input;
    std::string method = "closure";
    bool json = false;
    std::uint64_t budget = kDefaultBudget;
    std::optional<std::size_t> n;
    std::optional<std::size_t> d;
    std::optional<std::uint64_t> prime;  // `example` only: reduce mod p
    bool no_timing = false;               // report elapsed_ms = 0
};

const std::vector<std::string>& subcommands();

/// Runs a decision command on an instance and returns the report document:
/// {"command", "outcome", "witness", "failure_witness", "field", "n", "d",
///  "elapsed_ms", "instance", "instance_digest"}.
nlohmann::json decide(const Options& opts, const InstanceFile& inst);

/// Re-checks the witness (or, when there is none, the outcome) recorded in a
/// report produced by `decide`.
nlohmann::json verify_report(const nlohmann::json& report, const Options& opts);

/// FNV-1a 64-bit digest of the canonical instance text, as 16 hex digits.
std::string instance_digest(const std::string& canonical_text);

/// Human-readable rendering with the same content as the JSON document.
std::string render_text(const nlohmann::json& report);

/// Full command-line entry point. `args` excludes the program name. Reads
/// the instance from --input or, when absent, from `in`.
int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace locmem::cli
