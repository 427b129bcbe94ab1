#include "run.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>

#include <nlohmann/json.hpp>

#include "core/errors.hpp"

#ifndef RDELAB_VERSION
#define RDELAB_VERSION "0.0.0"
#endif

namespace rde::orchestrator
{
namespace
{
namespace fs = std::filesystem;

std::string num(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

char const* verdict(bool pass)
{
    return pass ? "PASS" : "FAIL";
}

// Anchors and names may contain commas; quote every text field.
std::string quoted(std::string const& s)
{
    std::string out = "\"";
    for (char c : s)
    {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + '"';
}

std::ofstream open_out(fs::path const& p)
{
    std::ofstream out(p, std::ios::binary);
    RDE_REQUIRE(out, OperationalError, "cannot write '" + p.string() + "'");
    return out;
}

std::string utc_now()
{
    auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

// JSON has no infinity; report non-finite numbers as null.
nlohmann::json jnum(double v)
{
    return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr);
}
}  // namespace

std::string version_string()
{
    return RDELAB_VERSION;
}

RunReport run_checks(RunConfig const& cfg, ProgressFn const& progress)
{
    cfg.validate();
    auto selected = select_checks(cfg);
    RunReport rep;
    rep.config = cfg;
    rep.version = version_string();
    rep.timestamp = utc_now();
    for (std::size_t i = 0; i < selected.size(); ++i)
    {
        auto const& spec = *selected[i];
        if (progress)
            progress(spec, i, selected.size());
        auto start = std::chrono::steady_clock::now();
        CheckRecord rec = spec.run(CheckContext(cfg, spec.name));
        rec.runtime = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        rec.name = spec.name;
        rec.anchor = spec.anchor;
        rep.pass = rep.pass && rec.pass;
        rep.records.push_back(std::move(rec));
    }
    return rep;
}

void write_report(RunReport const& rep, std::string const& dir_name)
{
    fs::path dir(dir_name);
    std::error_code ec;
    fs::create_directories(dir, ec);
    RDE_REQUIRE(!ec && fs::is_directory(dir), OperationalError,
                "cannot create output directory '" + dir_name + "'");

    auto checks = open_out(dir / "checks.csv");
    checks << "check,anchor,statistic,threshold,verdict,n\n";
    auto ks = open_out(dir / "ks.csv");
    ks << "check,n1,n2,statistic,threshold,verdict\n";
    for (auto const& r : rep.records)
    {
        checks << r.name << ',' << quoted(r.anchor) << ',' << num(r.statistic) << ','
               << num(r.threshold) << ',' << verdict(r.pass) << ',' << r.n << '\n';
        for (auto const& k : r.ks)
            ks << k.check << ',' << k.n1 << ',' << k.n2 << ',' << num(k.statistic) << ','
               << num(k.threshold) << ',' << verdict(k.pass) << '\n';
        if (r.tail)
        {
            auto tail = open_out(dir / ("tails_" + r.name + ".csv"));
            tail << "r,n,hits,p_hat,stderr\n";
            for (auto const& p : r.tail->points)
                tail << num(p.r) << ',' << p.n << ',' << p.hits << ',' << num(p.p_hat) << ','
                     << num(p.std_error) << '\n';
        }
        for (auto const& [name, values] : r.samples)
        {
            auto out = open_out(dir / (name + ".csv"));
            out << "value\n";
            for (double v : values)
                out << num(v) << '\n';
        }
    }

    using nlohmann::json;
    auto const& c = rep.config;
    json meta = {{"version", rep.version},
                 {"timestamp", rep.timestamp},
                 {"command", std::string(command_name(c.command))},
                 {"seed", c.seed},
                 {"workers", c.workers}};
    if (c.kappa)
        meta["kappa"] = *c.kappa;
    if (c.replicas)
        meta["replicas"] = *c.replicas;
    if (!c.suite.empty())
        meta["suite"] = c.suite;
    if (!c.r_grid.empty())
        meta["r_grid"] = c.r_grid;
    if (!c.dt.empty())
        meta["dt"] = c.dt;

    json records = json::array();
    for (auto const& r : rep.records)
    {
        json j = {{"name", r.name},
                  {"anchor", r.anchor},
                  {"statistic", jnum(r.statistic)},
                  {"threshold", jnum(r.threshold)},
                  {"verdict", verdict(r.pass)},
                  {"n", r.n},
                  {"runtime_seconds", r.runtime}};
        if (!r.note.empty())
            j["note"] = r.note;
        json values = json::object();
        for (auto const& [k, v] : r.values)
            values[k] = jnum(v);
        j["values"] = values;
        if (r.tail)
        {
            json pts = json::array();
            for (auto const& p : r.tail->points)
                pts.push_back({{"r", p.r}, {"n", p.n}, {"hits", p.hits},
                               {"p_hat", p.p_hat}, {"stderr", p.std_error}});
            j["tail"] = {{"points", pts}, {"fitted", r.tail->fitted}};
            if (r.tail->fitted)
            {
                j["tail"]["slope"] = r.tail->fit.slope;
                j["tail"]["slope_stderr"] = r.tail->fit.slope_stderr;
            }
        }
        records.push_back(std::move(j));
    }
    json doc = {{"metadata", meta},
                {"checks", records},
                {"overall_verdict", verdict(rep.pass)}};
    auto out = open_out(dir / "report.json");
    out << doc.dump(2) << '\n';
}

}  // namespace rde::orchestrator
