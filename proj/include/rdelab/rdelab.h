/*
 * C interface to the rdelab verification lab.
 *
 * Every function that can fail returns an rde_status; on failure the
 * message is available from rde_last_error() until the next call on the
 * same thread. Handles are opaque and owned by the caller.
 */
#ifndef RDELAB_RDELAB_H
#define RDELAB_RDELAB_H

#include <stddef.h>

#if defined(RDELAB_BUILDING)
#define RDE_API __attribute__((visibility("default")))
#else
#define RDE_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rde_status
{
    RDE_OK = 0,
    RDE_ERR_PARAMETER = 1,     /* bad key, value or combination */
    RDE_ERR_DOMAIN = 2,        /* input outside a formula's domain */
    RDE_ERR_CONVERGENCE = 3,   /* a sampler or solver hit its hard cap */
    RDE_ERR_OPERATIONAL = 4,   /* filesystem or environment problem */
    RDE_ERR_UNKNOWN_CHECK = 5, /* suite names a check that is not registered */
    RDE_ERR_NULL_ARG = 6,
    RDE_ERR_INTERNAL = 7
} rde_status;

typedef struct rde_config rde_config;
typedef struct rde_report rde_report;

typedef struct rde_check_result
{
    const char* name;   /* valid while the report lives */
    const char* anchor;
    double statistic;
    double threshold;
    int pass;
    size_t n;
    double runtime_seconds;
} rde_check_result;

/* Called before each check with its name, index and the total count. */
typedef void (*rde_progress_fn)(const char* check, size_t index, size_t total, void* user);

RDE_API const char* rde_version(void);
RDE_API const char* rde_last_error(void);
RDE_API const char* rde_status_name(rde_status status);

RDE_API rde_status rde_config_create(rde_config** out);
RDE_API void rde_config_destroy(rde_config* cfg);
/* Keys: command, kappa, seed, replicas, workers, out, suite, r_grid, dt.<name>. */
RDE_API rde_status rde_config_set(rde_config* cfg, const char* key, const char* value);
/* key=value lines; '#' starts a comment. */
RDE_API rde_status rde_config_load_file(rde_config* cfg, const char* path);
RDE_API rde_status rde_config_validate(const rde_config* cfg);

RDE_API rde_status rde_run(const rde_config* cfg, rde_progress_fn progress, void* user,
                           rde_report** out);
RDE_API void rde_report_destroy(rde_report* report);
RDE_API int rde_report_passed(const rde_report* report);
RDE_API size_t rde_report_count(const rde_report* report);
RDE_API rde_status rde_report_check(const rde_report* report, size_t index,
                                    rde_check_result* out);
/* dir may be NULL: the configured output directory, else $RDE_LAB_OUT. */
RDE_API rde_status rde_report_write(const rde_report* report, const char* dir);

RDE_API size_t rde_registry_size(void);
/* group receives the command group: verify, tails, speed or sturm. */
RDE_API rde_status rde_registry_entry(size_t index, const char** name, const char** anchor,
                                      const char** group);

#ifdef __cplusplus
}
#endif

#endif
