#ifndef SPARSEMULT_CLI_COMMANDS_HPP
#define SPARSEMULT_CLI_COMMANDS_HPP

#include "sparsemult_cli/document.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace sparsemult::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_input = 2,
    exit_condition = 3,
    exit_mismatch = 4,
    exit_invariant = 5,
};

/// Command-line flags; each one overrides the matching field of the input file.
struct Options {
    std::optional<Coord> M;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> bound;
    std::optional<std::size_t> kmax;
    std::size_t trials = 5;
    std::string format = "json";
};

/// Each command fills `doc` as it goes, so a failure still leaves every finished section in place.
void cmd_check(const InputDocument& in, const Options& opt, OutputDocument& doc);
void cmd_mult0(const InputDocument& in, const Options& opt, OutputDocument& doc);
void cmd_census(const InputDocument& in, const Options& opt, OutputDocument& doc);
/// Returns false if some trial still disagrees after resampling.
bool cmd_verify(const InputDocument& in, const Options& opt, OutputDocument& doc);

/// Runs a command and returns the finished document; never throws library errors.
OutputDocument execute(const std::string& command, const InputDocument& in, const Options& opt);

/// Full command line without the program name. Reads "-" or a missing path from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace sparsemult::cli

#endif
