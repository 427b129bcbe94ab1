#pragma once

#include <functional>
#include <string>
#include <vector>

#include "config.hpp"
#include "registry.hpp"

namespace rde::orchestrator
{
struct RunReport
{
    RunConfig config;
    std::string version;
    std::string timestamp;  //!< UTC, ISO 8601
    std::vector<CheckRecord> records;
    bool pass = true;  //!< Every record passed
};

//! Called before each check starts; used by the CLI for progress lines.
using ProgressFn = std::function<void(CheckSpec const&, std::size_t index, std::size_t total)>;

//! Validate the configuration, run the selected checks in registry order
//! and collect their records. No files are touched.
RunReport run_checks(RunConfig const& cfg, ProgressFn const& progress = {});

/*!
 * Write checks.csv, ks.csv, tails_<check>.csv, sample dumps and
 * report.json into dir, creating it if needed. CSV numbers use %.17g so
 * that identical runs give identical bytes; runtimes and the timestamp are
 * written to report.json only.
 */
void write_report(RunReport const& report, std::string const& dir);

std::string version_string();

}  // namespace rde::orchestrator
