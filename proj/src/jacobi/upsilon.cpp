#include "upsilon.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "core/errors.hpp"
#include "sampling/replicas.hpp"

namespace rde::jacobi
{
namespace
{
double integrand(double y, bool& saturated)
{
    double gap = 1 - y;
    if (gap < kUpsilonSaturation)
    {
        saturated = true;
        gap = kUpsilonSaturation;
    }
    return std::max(y, 0.0) / (gap * gap);
}
}  // namespace

UpsilonResult upsilon_of(ProcessPath const& path, double r)
{
    RDE_REQUIRE(r >= 0, ParameterError, "upsilon_of: r must be >= 0");
    RDE_REQUIRE(!path.values.empty() && path.end_time() >= r - 1e-12 * std::max(1.0, r),
                ParameterError, "upsilon_of: path does not reach r");
    UpsilonResult out;
    out.r = r;
    bool saturated = false;
    double total = 0;
    double prev = integrand(path.values[0], saturated);
    for (std::size_t i = 1; i < path.size(); ++i)
    {
        double a = path.time(i - 1);
        if (a >= r)
            break;
        double b = std::min(path.time(i), r);
        double y_b = b < path.time(i) ? path.at(b) : path.values[i];
        double cur = integrand(y_b, saturated);
        total += 0.5 * (b - a) * (prev + cur);
        prev = cur;
    }
    out.value = total;
    if (saturated)
        out.diagnostics.warn("upsilon_of: path within 1e-10 of 1, integrand capped");
    return out;
}

std::vector<unsigned char> upsilon_hits(double kappa, double u,
                                        std::vector<double> const& r_grid,
                                        std::size_t n, StreamFamily const& fam,
                                        unsigned workers,
                                        UpsilonTailOptions const& opts)
{
    RDE_REQUIRE(kappa > 0 && u > 0, ParameterError,
                "tail_upsilon: need kappa > 0 and u > 0");
    RDE_REQUIRE(!r_grid.empty() && r_grid.front() > 0
                    && std::is_sorted(r_grid.begin(), r_grid.end())
                    && std::adjacent_find(r_grid.begin(), r_grid.end()) == r_grid.end(),
                ParameterError, "tail_upsilon: r grid must be positive and increasing");
    std::size_t const m = r_grid.size();
    // Last column flags saturation.
    auto rows = sampling::map_replicas<std::vector<unsigned char>>(
        n, workers, fam, [&](std::size_t, sampling::RngStream& s) {
            std::vector<unsigned char> row(m + 1, 0);
            JacobiWalker w(2, 2 + 2 * kappa, opts.y0_start, opts.dt, opts.step);
            bool saturated = false;
            double total = 0;
            double prev = integrand(w.y(), saturated);
            for (std::size_t j = 0; j < m; ++j)
            {
                double r = r_grid[j];
                while (w.t() < r)
                {
                    double h = w.advance(r, s);
                    double cur = integrand(w.y(), saturated);
                    total += 0.5 * h * (prev + cur);
                    prev = cur;
                }
                row[j] = total > u * r;
            }
            row[m] = saturated;
            return row;
        });
    std::vector<unsigned char> flat;
    flat.reserve(n * (m + 1));
    for (auto const& row : rows)
        flat.insert(flat.end(), row.begin(), row.end());
    return flat;
}

UpsilonTail tail_upsilon(double kappa, double u, std::vector<double> const& r_grid,
                         std::size_t n, StreamFamily const& fam, unsigned workers,
                         UpsilonTailOptions const& opts)
{
    RDE_REQUIRE(r_grid.size() >= 3, ParameterError,
                "tail_upsilon: the slope fit needs at least 3 grid points");
    RDE_REQUIRE(n >= 1, ParameterError, "tail_upsilon: need n >= 1");
    auto flat = upsilon_hits(kappa, u, r_grid, n, fam, workers, opts);
    std::size_t const m = r_grid.size();
    std::vector<std::size_t> hits(m, 0);
    UpsilonTail out;
    for (std::size_t i = 0; i < n; ++i)
    {
        for (std::size_t j = 0; j < m; ++j)
            hits[j] += flat[i * (m + 1) + j];
        out.saturated_paths += flat[i * (m + 1) + m];
    }
    std::size_t usable = 0;
    for (std::size_t j = 0; j < m; ++j)
    {
        out.curve.points.push_back(analysis::make_tail_point(r_grid[j], n, hits[j]));
        if (hits[j] == 0)
            out.diagnostics.warn("tail_upsilon: no hits at r = " + std::to_string(r_grid[j]));
        else
            ++usable;
    }
    if (out.saturated_paths > 0)
        out.diagnostics.warn("tail_upsilon: " + std::to_string(out.saturated_paths)
                             + " paths saturated near 1");
    if (usable >= 3)
        analysis::fit_loglog_slope(out.curve);
    else
        out.diagnostics.warn("tail_upsilon: fewer than 3 cells with hits, slope not fitted");
    return out;
}

}  // namespace rde::jacobi
