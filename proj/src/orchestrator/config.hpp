#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rde::orchestrator
{
enum class Command
{
    verify,
    tails,
    speed,
    sturm,
    all
};

Command parse_command(std::string_view name);
std::string_view command_name(Command c);

/*!
 * Everything a run depends on. Built from a flat key=value file and
 * command-line overrides through the same set() entry point.
 *
 * Keys: command, kappa, seed, replicas, workers, out, suite (comma list),
 * r_grid (comma list, for the tail checks) and dt.<name> for named steps.
 */
struct RunConfig
{
    Command command = Command::verify;
    std::optional<double> kappa;
    std::uint64_t seed = 1;
    std::optional<std::size_t> replicas;
    unsigned workers = 1;
    std::map<std::string, double> dt;
    std::string output_dir;
    std::vector<std::string> suite;
    std::vector<double> r_grid;

    //! Apply one key=value pair. Unknown keys and malformed values throw
    //! ParameterError.
    void set(std::string_view key, std::string_view value);

    //! Checks that need no registry: replicas >= 1, workers >= 1, r_grid
    //! increasing with at least three points when given.
    void validate() const;
};

//! Read a key=value file: '#' starts a comment, blank lines are skipped.
void load_config_file(RunConfig& cfg, std::string const& path);

//! Output directory: the configured one, else $RDE_LAB_OUT. Throws
//! OperationalError when neither is set.
std::string resolve_output_dir(RunConfig const& cfg);

}  // namespace rde::orchestrator
