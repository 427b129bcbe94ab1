#include "rdelab/rdelab.h"

#include <algorithm>
#include <exception>
#include <string>

#include "core/errors.hpp"
#include "orchestrator/run.hpp"

using namespace rde;
using namespace rde::orchestrator;

struct rde_config
{
    RunConfig cfg;
};

struct rde_report
{
    RunReport rep;
};

namespace
{
thread_local std::string g_last_error;

rde_status fail(rde_status s, std::string msg)
{
    g_last_error = std::move(msg);
    return s;
}

template<class F>
rde_status guarded(F&& fn)
{
    try
    {
        g_last_error.clear();
        fn();
        return RDE_OK;
    }
    catch (ParameterError const& e)
    {
        return fail(RDE_ERR_PARAMETER, e.what());
    }
    catch (DomainError const& e)
    {
        return fail(RDE_ERR_DOMAIN, e.what());
    }
    catch (ConvergenceError const& e)
    {
        return fail(RDE_ERR_CONVERGENCE, e.what());
    }
    catch (OperationalError const& e)
    {
        return fail(RDE_ERR_OPERATIONAL, e.what());
    }
    catch (std::exception const& e)
    {
        return fail(RDE_ERR_INTERNAL, e.what());
    }
    catch (...)
    {
        return fail(RDE_ERR_INTERNAL, "unknown exception");
    }
}

bool is_registered(std::string const& name)
{
    auto const& reg = registry();
    return std::any_of(reg.begin(), reg.end(), [&](auto const& c) { return c.name == name; });
}
}  // namespace

extern "C" {

const char* rde_version(void)
{
    static std::string const v = version_string();
    return v.c_str();
}

const char* rde_last_error(void)
{
    return g_last_error.c_str();
}

const char* rde_status_name(rde_status s)
{
    switch (s)
    {
        case RDE_OK: return "ok";
        case RDE_ERR_PARAMETER: return "parameter error";
        case RDE_ERR_DOMAIN: return "domain error";
        case RDE_ERR_CONVERGENCE: return "convergence error";
        case RDE_ERR_OPERATIONAL: return "operational error";
        case RDE_ERR_UNKNOWN_CHECK: return "unknown check";
        case RDE_ERR_NULL_ARG: return "null argument";
        case RDE_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

rde_status rde_config_create(rde_config** out)
{
    if (!out)
        return fail(RDE_ERR_NULL_ARG, "rde_config_create: out is null");
    return guarded([&] { *out = new rde_config{}; });
}

void rde_config_destroy(rde_config* cfg)
{
    delete cfg;
}

rde_status rde_config_set(rde_config* cfg, const char* key, const char* value)
{
    if (!cfg || !key || !value)
        return fail(RDE_ERR_NULL_ARG, "rde_config_set: null argument");
    return guarded([&] { cfg->cfg.set(key, value); });
}

rde_status rde_config_load_file(rde_config* cfg, const char* path)
{
    if (!cfg || !path)
        return fail(RDE_ERR_NULL_ARG, "rde_config_load_file: null argument");
    return guarded([&] { load_config_file(cfg->cfg, path); });
}

rde_status rde_config_validate(const rde_config* cfg)
{
    if (!cfg)
        return fail(RDE_ERR_NULL_ARG, "rde_config_validate: cfg is null");
    for (auto const& name : cfg->cfg.suite)
        if (!is_registered(name))
            return fail(RDE_ERR_UNKNOWN_CHECK, "unknown check '" + name + "'");
    return guarded([&] { cfg->cfg.validate(); });
}

rde_status rde_run(const rde_config* cfg, rde_progress_fn progress, void* user,
                   rde_report** out)
{
    if (!cfg || !out)
        return fail(RDE_ERR_NULL_ARG, "rde_run: null argument");
    *out = nullptr;
    if (auto s = rde_config_validate(cfg); s != RDE_OK)
        return s;
    return guarded([&] {
        ProgressFn fn;
        if (progress)
            fn = [&](CheckSpec const& c, std::size_t i, std::size_t total) {
                progress(c.name.c_str(), i, total, user);
            };
        *out = new rde_report{run_checks(cfg->cfg, fn)};
    });
}

void rde_report_destroy(rde_report* report)
{
    delete report;
}

int rde_report_passed(const rde_report* report)
{
    return report && report->rep.pass ? 1 : 0;
}

size_t rde_report_count(const rde_report* report)
{
    return report ? report->rep.records.size() : 0;
}

rde_status rde_report_check(const rde_report* report, size_t index, rde_check_result* out)
{
    if (!report || !out)
        return fail(RDE_ERR_NULL_ARG, "rde_report_check: null argument");
    if (index >= report->rep.records.size())
        return fail(RDE_ERR_PARAMETER, "rde_report_check: index out of range");
    auto const& r = report->rep.records[index];
    *out = {r.name.c_str(), r.anchor.c_str(), r.statistic, r.threshold, r.pass ? 1 : 0, r.n,
            r.runtime};
    return RDE_OK;
}

rde_status rde_report_write(const rde_report* report, const char* dir)
{
    if (!report)
        return fail(RDE_ERR_NULL_ARG, "rde_report_write: report is null");
    return guarded([&] {
        write_report(report->rep, dir ? std::string(dir) : resolve_output_dir(report->rep.config));
    });
}

size_t rde_registry_size(void)
{
    return registry().size();
}

rde_status rde_registry_entry(size_t index, const char** name, const char** anchor,
                              const char** group)
{
    auto const& reg = registry();
    if (index >= reg.size())
        return fail(RDE_ERR_PARAMETER, "rde_registry_entry: index out of range");
    auto const& c = reg[index];
    if (name)
        *name = c.name.c_str();
    if (anchor)
        *anchor = c.anchor.c_str();
    if (group)
        *group = command_name(c.groups.front()).data();
    return RDE_OK;
}

}  // extern "C"
