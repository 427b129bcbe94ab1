#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "analysis/tail_fit.hpp"
#include "config.hpp"
#include "sampling/rng.hpp"

namespace rde::orchestrator
{
//! One row of ks.csv. n2 == 0 marks a test against a reference CDF.
struct KsRow
{
    std::string check;
    std::size_t n1 = 0;
    std::size_t n2 = 0;
    double statistic = 0;
    double threshold = 0;
    bool pass = false;
};

struct CheckRecord
{
    std::string name;
    std::string anchor;
    double statistic = 0;
    double threshold = 0;
    bool pass = false;
    std::size_t n = 0;
    double runtime = 0;  //!< Seconds; reported in JSON only
    std::string note;
    std::vector<std::pair<std::string, double>> values;  //!< Extra numbers for JSON
    std::vector<KsRow> ks;
    std::optional<analysis::TailCurve> tail;
    //! Named one-column sample dumps, written as <name>.csv.
    std::vector<std::pair<std::string, std::vector<double>>> samples;
};

//! What a check may read from the run configuration.
class CheckContext
{
  public:
    CheckContext(RunConfig const& cfg, std::string name) : cfg_(&cfg), name_(std::move(name)) {}

    unsigned workers() const { return cfg_->workers; }
    sampling::StreamFamily family() const
    {
        return {cfg_->seed, sampling::hash_name(name_)};
    }
    std::size_t n(std::size_t fallback) const { return cfg_->replicas.value_or(fallback); }
    double kappa(double fallback) const { return cfg_->kappa.value_or(fallback); }
    double dt(std::string const& key, double fallback) const
    {
        auto it = cfg_->dt.find(key);
        return it == cfg_->dt.end() ? fallback : it->second;
    }
    std::vector<double> r_grid(std::vector<double> fallback) const
    {
        return cfg_->r_grid.empty() ? std::move(fallback) : cfg_->r_grid;
    }

  private:
    RunConfig const* cfg_;
    std::string name_;
};

struct CheckSpec
{
    std::string name;
    std::string anchor;  //!< The identity or law the check exercises
    std::vector<Command> groups;
    bool uses_kappa = false;   //!< Whether --kappa changes this check
    bool uses_r_grid = false;  //!< Whether r_grid changes this check
    std::function<CheckRecord(CheckContext const&)> run;
};

//! The full registry in a fixed order; names are unique.
std::vector<CheckSpec> const& registry();

//! Checks selected by a configuration: the suite list when given (any
//! group), otherwise every check in the command's group. An unknown name
//! throws ParameterError listing the registry.
std::vector<CheckSpec const*> select_checks(RunConfig const& cfg);

}  // namespace rde::orchestrator
