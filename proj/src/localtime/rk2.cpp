#include "rk2.hpp"

#include <algorithm>
#include <cmath>

#include "bessel/besq.hpp"
#include "core/errors.hpp"

namespace rde::localtime
{
ExactRKField sample_rk2_field(double ell, double x_max, double grid_step,
                              RngStream& stream)
{
    RDE_REQUIRE(ell > 0, ParameterError, "sample_rk2_field: ell must be > 0");
    RDE_REQUIRE(x_max > 0 && grid_step > 0, ParameterError,
                "sample_rk2_field: need x_max > 0 and grid_step > 0");
    auto steps = static_cast<std::size_t>(std::ceil(x_max / grid_step - 1e-9));
    ExactRKField field;
    field.levels.resize(steps + 1);
    field.values.assign(steps + 1, 0.0);
    field.values[0] = ell;
    field.levels[0] = 0;
    for (std::size_t i = 1; i <= steps; ++i)
    {
        field.levels[i] = grid_step * static_cast<double>(i);
        double prev = field.values[i - 1];
        field.values[i] = prev > 0 ? bessel::besq_step(prev, 0, grid_step, stream)
                                   : 0.0;
    }
    return field;
}

Rk2Integral integrate_rk2_field(double ell, std::vector<Rk2Segment> const& segments,
                                Rk2IntegratorOptions const& opts,
                                RngStream& stream)
{
    RDE_REQUIRE(ell > 0, ParameterError, "integrate_rk2_field: ell must be > 0");
    RDE_REQUIRE(!segments.empty(), ParameterError,
                "integrate_rk2_field: need at least one segment");
    RDE_REQUIRE(opts.x_start >= 0 && opts.x_start < segments.front().x_end,
                ParameterError,
                "integrate_rk2_field: start level must precede the first "
                "segment end");

    Rk2Integral out;
    double x = 0;
    double z = ell;
    if (opts.x_start > 0)
    {
        z = bessel::besq_step(z, 0, opts.x_start, stream);
        x = opts.x_start;
    }
    std::size_t seg = 0;
    while (seg < segments.size() && segments[seg].x_end <= x)
        ++seg;

    double const h_min = opts.h_min * ell;
    while (seg < segments.size() && z > 0)
    {
        auto const& s = segments[seg];
        double h = opts.rel_z * std::max(z, opts.z_floor * ell);
        if (x > 0)
            h = std::min(h, opts.rel_x * x);
        h = std::clamp(h, h_min, opts.h_max);
        bool closes = x + h >= s.x_end;
        double x_next = closes ? s.x_end : x + h;
        double z_next = bessel::besq_step(z, 0, x_next - x, stream);
        out.value += 0.5 * (x_next - x)
                     * (s.integrand(x, z) + s.integrand(x_next, z_next));
        x = x_next;
        z = z_next;
        if (closes)
            ++seg;
    }
    out.final_level = x;
    if (z == 0)
    {
        out.absorbed = true;
        for (; seg < segments.size(); ++seg)
        {
            auto const& s = segments[seg];
            if (s.absorbed_integral && s.x_end > x)
                out.value += s.absorbed_integral(x, s.x_end);
            x = std::max(x, s.x_end);
        }
    }
    return out;
}

double rk2_truncation_level(double ell, double alive)
{
    RDE_REQUIRE(ell > 0 && alive > 0 && alive < 1, ParameterError,
                "rk2_truncation_level: need ell > 0 and alive in (0, 1)");
    return -ell / (2 * std::log1p(-alive));
}

}  // namespace rde::localtime
