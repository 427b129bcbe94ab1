#include "lamperti.hpp"

#include <algorithm>
#include <cmath>

#include "core/errors.hpp"

namespace rde::bessel
{
LampertiResult lamperti_transform(ProcessPath const& bm_path, double zeta)
{
    RDE_REQUIRE(!bm_path.values.empty() && bm_path.values.front() == 0,
                ParameterError, "lamperti_transform: path must start at 0");
    std::size_t const n = bm_path.size();
    LampertiResult out;
    auto& clock = out.r_on_clock.clock;
    auto& r = out.r_on_clock.values;
    clock.resize(n);
    r.resize(n);

    std::vector<double> expo(n);
    for (std::size_t i = 0; i < n; ++i)
    {
        double drifted = bm_path.values[i] + 0.5 * zeta * bm_path.time(i);
        expo[i] = std::exp(drifted);
        r[i] = 2 * std::exp(0.5 * drifted);
    }
    clock[0] = 0;
    for (std::size_t i = 1; i < n; ++i)
        clock[i] = clock[i - 1] + 0.5 * bm_path.dt * (expo[i - 1] + expo[i]);

    for (std::size_t i = 0; i < n; ++i)
    {
        double rr = out.r_on_clock.at(clock[i]);
        out.max_residual
            = std::max(out.max_residual, std::fabs(expo[i] - 0.25 * rr * rr));
    }
    return out;
}

}  // namespace rde::bessel
