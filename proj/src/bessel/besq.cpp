#include "besq.hpp"

#include <algorithm>
#include <cmath>

#include "core/errors.hpp"
#include "sampling/distributions.hpp"

namespace rde::bessel
{
void BesqSpec::validate() const
{
    RDE_REQUIRE(start >= 0 && std::isfinite(start), ParameterError,
                "BESQ: start must be finite and >= 0");
    RDE_REQUIRE(std::isfinite(dimension_d), ParameterError,
                "BESQ: dimension must be finite");
}

double besq_step(double x, double d, double dt, RngStream& stream)
{
    RDE_REQUIRE(x >= 0 && dt > 0, ParameterError,
                "besq_step: need x >= 0 and dt > 0");
    if (x == 0 && d <= 0)
        return 0;
    if (d >= 0)
        return dt * sampling::draw_noncentral_chisq(stream, d, x / dt);
    double next = x + d * dt
                  + 2 * std::sqrt(x * dt) * sampling::draw_gaussian(stream);
    return std::max(next, 0.0);
}

ProcessPath simulate_besq(BesqSpec const& spec, double horizon, double dt,
                          RngStream& stream)
{
    spec.validate();
    RDE_REQUIRE(horizon >= 0 && dt > 0, ParameterError,
                "simulate_besq: need horizon >= 0 and dt > 0");
    auto steps = static_cast<std::size_t>(std::ceil(horizon / dt - 1e-9));
    ProcessPath path;
    path.dt = dt;
    path.values.assign(steps + 1, 0.0);
    path.values[0] = spec.start;
    double const d = spec.dimension_d;
    for (std::size_t i = 1; i <= steps; ++i)
    {
        double prev = path.values[i - 1];
        if (prev == 0 && d <= 0)
        {
            if (!path.absorbed_at)
                path.absorbed_at = path.time(i - 1);
            break;
        }
        double next;
        if (d < 0)
        {
            double raw = prev + d * dt
                         + 2 * std::sqrt(prev * dt)
                               * sampling::draw_gaussian(stream);
            next = std::max(raw, 0.0);
            if (raw <= 0)
                path.absorbed_at = path.time(i - 1) + dt * prev / (prev - raw);
        }
        else
        {
            next = besq_step(prev, d, dt, stream);
            if (next == 0 && d == 0)
                path.absorbed_at = path.time(i);
        }
        path.values[i] = next;
    }
    return path;
}

double sample_s_infinity(double kappa, RngStream& stream,
                         SInfinityOptions const& opts)
{
    RDE_REQUIRE(kappa > 0, ParameterError, "sample_s_infinity: kappa > 0");
    RDE_REQUIRE(opts.dt > 0 && opts.dt_min > 0 && opts.dt_min <= opts.dt,
                ParameterError, "sample_s_infinity: invalid step bounds");
    double const d = 2 - 2 * kappa;
    double x = 4;
    double t = 0;
    double horizon = opts.horizon;
    for (;;)
    {
        double h = std::clamp(opts.near_zero * x, opts.dt_min, opts.dt);
        double next = x + d * h
                      + 2 * std::sqrt(x * h) * sampling::draw_gaussian(stream);
        if (next <= 0)
            return t + h * x / (x - next);
        x = next;
        t += h;
        if (t > horizon)
        {
            if (horizon >= opts.hard_cap)
                throw ConvergenceError(
                    "sample_s_infinity: no absorption before the hard cap");
            horizon = std::min(2 * horizon, opts.hard_cap);
        }
    }
}

double besq0_running_max(double start, double cap, double dt, RngStream& stream)
{
    RDE_REQUIRE(start >= 0 && dt > 0, ParameterError,
                "besq0_running_max: need start >= 0 and dt > 0");
    double x = start;
    double best = x;
    while (x > 0 && best <= cap)
    {
        x = besq_step(x, 0, dt, stream);
        best = std::max(best, x);
    }
    return best;
}

}  // namespace rde::bessel
