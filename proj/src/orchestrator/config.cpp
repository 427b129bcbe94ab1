#include "config.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>

#include "core/errors.hpp"

namespace rde::orchestrator
{
namespace
{
std::string_view trim(std::string_view s)
{
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos)
        return {};
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double to_double(std::string_view key, std::string_view v)
{
    std::string s(v);
    char* end = nullptr;
    double out = std::strtod(s.c_str(), &end);
    RDE_REQUIRE(!s.empty() && end == s.c_str() + s.size() && std::isfinite(out),
                ParameterError, std::string(key) + ": not a number: '" + s + "'");
    return out;
}

std::uint64_t to_uint(std::string_view key, std::string_view v)
{
    std::uint64_t out = 0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    RDE_REQUIRE(ec == std::errc() && ptr == v.data() + v.size() && !v.empty(), ParameterError,
                std::string(key) + ": not a non-negative integer: '" + std::string(v) + "'");
    return out;
}

std::vector<std::string_view> split_commas(std::string_view v)
{
    std::vector<std::string_view> out;
    while (!v.empty())
    {
        auto pos = v.find(',');
        auto item = trim(v.substr(0, pos));
        if (!item.empty())
            out.push_back(item);
        if (pos == std::string_view::npos)
            break;
        v.remove_prefix(pos + 1);
    }
    return out;
}
}  // namespace

Command parse_command(std::string_view name)
{
    if (name == "verify")
        return Command::verify;
    if (name == "tails")
        return Command::tails;
    if (name == "speed")
        return Command::speed;
    if (name == "sturm")
        return Command::sturm;
    if (name == "all")
        return Command::all;
    throw ParameterError("unknown command '" + std::string(name)
                         + "' (expected verify, tails, speed, sturm or all)");
}

std::string_view command_name(Command c)
{
    switch (c)
    {
        case Command::verify: return "verify";
        case Command::tails: return "tails";
        case Command::speed: return "speed";
        case Command::sturm: return "sturm";
        case Command::all: return "all";
    }
    return "?";
}

void RunConfig::set(std::string_view key, std::string_view value)
{
    key = trim(key);
    value = trim(value);
    if (key == "command")
        command = parse_command(value);
    else if (key == "kappa")
        kappa = to_double(key, value);
    else if (key == "seed")
        seed = to_uint(key, value);
    else if (key == "replicas")
        replicas = static_cast<std::size_t>(to_uint(key, value));
    else if (key == "workers")
        workers = static_cast<unsigned>(to_uint(key, value));
    else if (key == "out")
        output_dir = std::string(value);
    else if (key == "suite")
    {
        suite.clear();
        for (auto s : split_commas(value))
            suite.emplace_back(s);
    }
    else if (key == "r_grid")
    {
        r_grid.clear();
        for (auto s : split_commas(value))
            r_grid.push_back(to_double(key, s));
    }
    else if (key.starts_with("dt.") && key.size() > 3)
    {
        double v = to_double(key, value);
        RDE_REQUIRE(v > 0, ParameterError, std::string(key) + " must be > 0");
        dt[std::string(key.substr(3))] = v;
    }
    else
        throw ParameterError("unknown configuration key '" + std::string(key) + "'");
}

void RunConfig::validate() const
{
    RDE_REQUIRE(!replicas || *replicas >= 1, ParameterError, "replicas must be >= 1");
    RDE_REQUIRE(workers >= 1, ParameterError, "workers must be >= 1");
    if (!r_grid.empty())
    {
        RDE_REQUIRE(r_grid.size() >= 3, ParameterError,
                    "r_grid has " + std::to_string(r_grid.size())
                        + " point(s); a log-log slope fit needs at least 3");
        for (std::size_t i = 0; i < r_grid.size(); ++i)
            RDE_REQUIRE(r_grid[i] > 0 && (i == 0 || r_grid[i] > r_grid[i - 1]),
                        ParameterError, "r_grid must be positive and strictly increasing");
    }
}

void load_config_file(RunConfig& cfg, std::string const& path)
{
    std::ifstream in(path);
    RDE_REQUIRE(in, OperationalError, "cannot open config file '" + path + "'");
    std::string line;
    int lineno = 0;
    while (std::getline(in, line))
    {
        ++lineno;
        auto body = trim(std::string_view(line).substr(0, line.find('#')));
        if (body.empty())
            continue;
        auto eq = body.find('=');
        RDE_REQUIRE(eq != std::string_view::npos, ParameterError,
                    path + ":" + std::to_string(lineno) + ": expected key=value");
        cfg.set(body.substr(0, eq), body.substr(eq + 1));
    }
}

std::string resolve_output_dir(RunConfig const& cfg)
{
    if (!cfg.output_dir.empty())
        return cfg.output_dir;
    if (char const* env = std::getenv("RDE_LAB_OUT"); env && *env)
        return env;
    throw OperationalError("no output directory: pass --out or set RDE_LAB_OUT");
}

}  // namespace rde::orchestrator
