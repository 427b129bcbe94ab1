#include "tail_fit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "core/errors.hpp"

namespace rde::analysis
{
TailPoint make_tail_point(double r, std::size_t n, std::size_t hits)
{
    RDE_REQUIRE(n > 0 && hits <= n, ParameterError,
                "tail point: need n > 0 and hits <= n");
    TailPoint pt;
    pt.r = r;
    pt.n = n;
    pt.hits = hits;
    pt.p_hat = double(hits) / double(n);
    pt.std_error = std::sqrt(pt.p_hat * (1 - pt.p_hat) / double(n));
    return pt;
}

SlopeFit fit_loglog_slope(std::vector<TailPoint> const& points)
{
    SlopeFit fit;
    bool any_zero_error = false;
    for (auto const& pt : points)
    {
        RDE_REQUIRE(pt.r > 0, ParameterError, "slope fit: r must be positive");
        if (!(pt.p_hat > 0))
            continue;
        fit.log_r.push_back(std::log(pt.r));
        fit.log_p.push_back(std::log(pt.p_hat));
        fit.weights.push_back(pt.std_error > 0
                                  ? pt.p_hat * pt.p_hat
                                        / (pt.std_error * pt.std_error)
                                  : 0.0);
        any_zero_error = any_zero_error || !(pt.std_error > 0);
    }
    std::size_t const m = fit.log_r.size();
    RDE_REQUIRE(m >= 3, ParameterError,
                "slope fit: need at least 3 grid points with nonzero counts");
    {
        auto sorted = fit.log_r;
        std::sort(sorted.begin(), sorted.end());
        RDE_REQUIRE(std::adjacent_find(sorted.begin(), sorted.end())
                        == sorted.end(),
                    ParameterError, "slope fit: grid has repeated r values");
    }
    if (any_zero_error)
        std::fill(fit.weights.begin(), fit.weights.end(), 1.0);

    double sw = 0, sx = 0, sy = 0;
    for (std::size_t i = 0; i < m; ++i)
    {
        sw += fit.weights[i];
        sx += fit.weights[i] * fit.log_r[i];
        sy += fit.weights[i] * fit.log_p[i];
    }
    double xbar = sx / sw, ybar = sy / sw;
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < m; ++i)
    {
        double dx = fit.log_r[i] - xbar;
        sxx += fit.weights[i] * dx * dx;
        sxy += fit.weights[i] * dx * (fit.log_p[i] - ybar);
    }
    fit.slope = sxy / sxx;
    fit.intercept = ybar - fit.slope * xbar;

    if (!any_zero_error)
    {
        fit.slope_stderr = std::sqrt(1.0 / sxx);
    }
    else
    {
        double rss = 0;
        for (std::size_t i = 0; i < m; ++i)
        {
            double e = fit.log_p[i] - fit.intercept - fit.slope * fit.log_r[i];
            rss += e * e;
        }
        fit.slope_stderr = std::sqrt(rss / double(m - 2) / sxx);
        // An exact fit still reports a strictly positive error, at the
        // resolution of the arithmetic.
        fit.slope_stderr = std::max(
            fit.slope_stderr, std::numeric_limits<double>::epsilon()
                                  * std::max(1.0, std::fabs(fit.slope)));
    }
    return fit;
}

void fit_loglog_slope(TailCurve& curve)
{
    curve.fit = fit_loglog_slope(curve.points);
    curve.fitted = true;
}

}  // namespace rde::analysis
