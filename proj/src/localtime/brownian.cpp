#include "brownian.hpp"

#include <algorithm>
#include <cmath>

#include "core/errors.hpp"
#include "sampling/distributions.hpp"

namespace rde::localtime
{
double LocalTimeField::integral() const
{
    double total = 0;
    for (std::size_t i = 1; i < levels.size(); ++i)
        total += 0.5 * (levels[i] - levels[i - 1]) * (values[i] + values[i - 1]);
    return total;
}

double default_bandwidth(double dt)
{
    return std::pow(dt, 0.4);
}

SigmaPath simulate_to_sigma(double r, double dt, double horizon,
                            RngStream& stream)
{
    RDE_REQUIRE(r > 0 && dt > 0 && horizon > 0, ParameterError,
                "simulate_to_sigma: need r, dt, horizon > 0");
    SigmaPath out;
    out.path.dt = dt;
    auto& v = out.path.values;
    v.push_back(0);
    double const sd = std::sqrt(dt);
    double b = 0;
    std::size_t k = 0;
    while (static_cast<double>(k) * dt < horizon)
    {
        double next = b + sd * sampling::draw_gaussian(stream);
        ++k;
        bool crossed = next >= r;
        if (!crossed)
        {
            double p = std::exp(-2 * (r - b) * (r - next) / dt);
            crossed = stream.uniform() < p;
        }
        v.push_back(next);
        b = next;
        if (crossed)
        {
            out.reached = true;
            out.sigma_time = static_cast<double>(k) * dt;
            return out;
        }
    }
    out.sigma_time = static_cast<double>(k) * dt;
    out.diagnostics.warn("simulate_to_sigma: horizon reached before sigma");
    return out;
}

LocalTimeField local_time_profile(ProcessPath const& path, double bandwidth,
                                  StopRule rule)
{
    RDE_REQUIRE(bandwidth > 0, ParameterError,
                "local_time_profile: bandwidth must be > 0");
    RDE_REQUIRE(path.size() >= 2, ParameterError,
                "local_time_profile: path needs at least two points");
    LocalTimeField field;
    field.bandwidth = bandwidth;
    field.stop_rule = rule;
    if (bandwidth < std::sqrt(path.dt))
        field.diagnostics.warn(
            "local_time_profile: bandwidth below the sqrt(dt) resolution of "
            "the path");

    auto const& v = path.values;
    std::size_t const n = v.size() - 1;  // points carrying time
    auto [lo_it, hi_it] = std::minmax_element(v.begin(), v.begin() + n);
    double const step = bandwidth / 4;
    double const origin = std::floor((*lo_it - bandwidth) / step) * step;
    auto count = static_cast<std::size_t>(
                     std::ceil((*hi_it + bandwidth - origin) / step))
                 + 1;
    field.levels.resize(count);
    for (std::size_t j = 0; j < count; ++j)
        field.levels[j] = origin + step * static_cast<double>(j);

    // Difference array: point b adds to every level in (b - h, b + h).
    std::vector<double> diff(count + 1, 0.0);
    for (std::size_t k = 0; k < n; ++k)
    {
        double b = v[k];
        auto first = static_cast<std::ptrdiff_t>(
            std::floor((b - bandwidth - origin) / step)) + 1;
        auto last = static_cast<std::ptrdiff_t>(
            std::ceil((b + bandwidth - origin) / step)) - 1;
        // Guard rounding at the open ends of the window.
        while (first <= last && !(std::fabs(b - field.levels[first]) < bandwidth))
            ++first;
        while (last >= first && !(std::fabs(b - field.levels[last]) < bandwidth))
            --last;
        if (first > last)
            continue;
        diff[static_cast<std::size_t>(first)] += 1;
        diff[static_cast<std::size_t>(last) + 1] -= 1;
    }
    field.values.resize(count);
    double running = 0;
    double const scale = path.dt / (2 * bandwidth);
    for (std::size_t j = 0; j < count; ++j)
    {
        running += diff[j];
        field.values[j] = running * scale;
    }
    return field;
}

Rk1Sample sample_rk1_levels(double r, std::vector<double> const& levels,
                            Rk1Options const& opts, RngStream& stream)
{
    double const dt = opts.dt;
    double const h = opts.bandwidth > 0 ? opts.bandwidth : default_bandwidth(dt);
    double const floor_level = opts.skip_below;
    RDE_REQUIRE(r > 0 && dt > 0, ParameterError,
                "sample_rk1_levels: need r > 0 and dt > 0");
    RDE_REQUIRE(floor_level < 0, ParameterError,
                "sample_rk1_levels: skip level must be below the start");
    for (double x : levels)
        RDE_REQUIRE(x - h > floor_level, ParameterError,
                    "sample_rk1_levels: every level must sit a bandwidth "
                    "above the skip level");

    Rk1Sample out;
    out.levels = levels;
    std::vector<std::size_t> counts(levels.size(), 0);
    double const sd = std::sqrt(dt);
    double b = 0;
    double t = 0;
    while (t < opts.horizon)
    {
        for (std::size_t j = 0; j < levels.size(); ++j)
            counts[j] += std::fabs(b - levels[j]) < h;
        double next = b + sd * sampling::draw_gaussian(stream);
        t += dt;
        bool crossed = next >= r;
        if (!crossed)
            crossed = stream.uniform() < std::exp(-2 * (r - b) * (r - next) / dt);
        if (crossed)
        {
            out.reached = true;
            break;
        }
        if (next < floor_level)
        {
            double depth = floor_level - next;
            double z = sampling::draw_gaussian(stream);
            t += depth * depth / (z * z);
            next = floor_level;
        }
        b = next;
    }
    out.sigma_time = t;
    out.local_times.resize(levels.size());
    for (std::size_t j = 0; j < levels.size(); ++j)
        out.local_times[j] = dt * static_cast<double>(counts[j]) / (2 * h);
    return out;
}

}  // namespace rde::localtime
