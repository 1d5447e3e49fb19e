#ifndef FROBKIT_DSL_INTERPRETER_HPP
#define FROBKIT_DSL_INTERPRETER_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "frobkit/groebner.hpp"
#include "frobkit/monomial_order.hpp"

namespace frobkit::dsl {

struct RunOptions {
    OrderKind order = OrderKind::grevlex;
    std::uint64_t seed = 0;
    std::uint64_t budget = EngineSettings{}.reduction_budget;
    /// Enables the on-disk basis cache under <workspace>/gbcache.
    std::optional<std::filesystem::path> workspace;
    bool pretty = false;
};

/// Exit codes of run_script.
inline constexpr int exit_ok = 0;
inline constexpr int exit_command_error = 1;
inline constexpr int exit_syntax_error = 2;

/// Runs a script: one JSON object per command on `out`, diagnostics on
/// `err`. Returns exit_syntax_error without running anything if the script
/// does not parse, exit_command_error if any command failed.
int run_script(std::string_view source, const RunOptions& options, std::ostream& out, std::ostream& err);

/// Names of all commands the interpreter understands.
std::vector<std::string> command_names();

}  // namespace frobkit::dsl

#endif
