#include "perpetuity.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "besq.hpp"
#include "core/errors.hpp"

namespace rde::bessel
{
PerpetuityDraw sample_perpetuity(double d, double b, double horizon,
                                 sampling::RngStream& stream,
                                 PerpetuityOptions const& opts)
{
    RDE_REQUIRE(d > 2 && b > 2, ParameterError,
                "sample_perpetuity: need d > 2 and b > 2");
    RDE_REQUIRE(horizon > 0, ParameterError,
                "sample_perpetuity: horizon must be > 0");
    double const half_b = 0.5 * b;
    double q = 4;  // R(0)^2
    double t = 0;
    double f = std::pow(q, -half_b);
    double total = 0;
    double quiet_since = f < opts.quiet_level ? 0 : -1;

    // (time, running integral) checkpoints to measure the final 10% share.
    std::vector<double> times{0.0}, running{0.0};
    PerpetuityDraw out;
    while (t < horizon)
    {
        double h = std::clamp(opts.step_fraction * q, opts.dt_min, opts.dt_max);
        h = std::min(h, horizon - t);
        double q_next = besq_step(q, d, h, stream);
        double f_next = q_next > 0 ? std::pow(q_next, -half_b)
                                   : std::numeric_limits<double>::infinity();
        total += 0.5 * h * (f + f_next);
        t += h;
        q = q_next;
        f = f_next;
        times.push_back(t);
        running.push_back(total);
        if (f < opts.quiet_level)
        {
            if (quiet_since < 0)
                quiet_since = t;
            if (t - quiet_since >= opts.quiet_span)
            {
                out.stopped_quiet = true;
                break;
            }
        }
        else
        {
            quiet_since = -1;
        }
    }
    out.value = total;
    out.stop_time = t;
    auto it = std::lower_bound(times.begin(), times.end(), 0.9 * t);
    double before = running[static_cast<std::size_t>(it - times.begin())];
    out.tail_share = total > 0 ? (total - before) / total : 0;
    out.horizon_flag = out.tail_share > opts.tail_share_tol;
    return out;
}

double perpetuity_scale(double b)
{
    return 1 / (std::pow(2.0, b - 2) * (b - 2) * (b - 2));
}

double perpetuity_index(double d, double b)
{
    return (d - 2) / (b - 2);
}

}  // namespace rde::bessel
