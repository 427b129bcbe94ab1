#include "paths.hpp"

#include <cmath>

#include "core/errors.hpp"
#include "distributions.hpp"

namespace rde::sampling
{
ProcessPath brownian_path(double t_max, double dt, RngStream& stream)
{
    RDE_REQUIRE(t_max >= 0 && dt > 0, ParameterError,
                "brownian_path: need t_max >= 0 and dt > 0");
    auto steps = static_cast<std::size_t>(std::ceil(t_max / dt - 1e-9));
    ProcessPath path;
    path.dt = dt;
    path.values.resize(steps + 1);
    path.values[0] = 0;
    double sd = std::sqrt(dt);
    for (std::size_t i = 1; i <= steps; ++i)
        path.values[i] = path.values[i - 1] + sd * draw_gaussian(stream);
    return path;
}

}  // namespace rde::sampling
