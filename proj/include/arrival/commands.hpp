#pragma once

// Subcommand bodies of the arrival CLI. Each takes the already-read input
// text and writes to the given streams, so the same code path serves the
// binary and in-process callers. Return values are process exit codes.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "arrival/generator.hpp"
#include "arrival/property_suite.hpp"

namespace arrival::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitUsage = 2;

int cmd_gen(const GeneratorSpec& spec, std::ostream& out, std::ostream& err);

struct SimulateOptions {
    std::optional<std::uint64_t> budget;
    bool trace = false;
    bool json = false;
};
int cmd_simulate(std::string_view graph, const SimulateOptions& opts, std::ostream& out,
                 std::ostream& err);

int cmd_decide(std::string_view graph, bool json, std::ostream& out, std::ostream& err);

// Writes H to out and the sidecar document to sidecar (which may be out).
int cmd_reduce(std::string_view graph, std::ostream& out, std::ostream& sidecar,
               std::ostream& err);

// Exit 0 iff the flow verifies against the graph and the flow's own endpoints.
int cmd_verify_flow(std::string_view graph, std::string_view flow, bool json,
                    std::ostream& out, std::ostream& err);

// graph is the original G; flow is a switching flow of (H, o_bar, u) with u
// taken from the flow's "dest" field. Exit 1 if the bounds audit fails.
int cmd_complete(std::string_view graph, std::string_view flow, bool json, std::ostream& out,
                 std::ostream& err);

enum class WalkMode { LocalOpt, SinkOfPath };

struct WalkCommandOptions {
    std::string start = "reset";  // "reset" or hex-encoded state
    std::optional<std::uint64_t> budget;
    bool trace = false;
    WalkMode mode = WalkMode::LocalOpt;
};
int cmd_walk(std::string_view graph, const WalkCommandOptions& opts, std::ostream& out,
             std::ostream& err);

int cmd_solve(std::string_view graph, std::ostream& out, std::ostream& err);

int cmd_check(const SuiteOptions& opts, bool json, std::ostream& out, std::ostream& err);

}  // namespace arrival::cli
