#pragma once

#include <cstddef>
#include <vector>

namespace rde::analysis
{
//! One row of a tail curve: P(event at scale r) estimated from n trials.
struct TailPoint
{
    double r = 0;
    std::size_t n = 0;
    std::size_t hits = 0;
    double p_hat = 0;
    double std_error = 0;
};

//! Binomial estimate p = hits/n with standard error sqrt(p(1-p)/n).
TailPoint make_tail_point(double r, std::size_t n, std::size_t hits);

struct SlopeFit
{
    std::vector<double> log_r;
    std::vector<double> log_p;
    std::vector<double> weights;
    double slope = 0;
    double intercept = 0;
    double slope_stderr = 0;

    double band_lower(double z = 1.96) const { return slope - z * slope_stderr; }
    double band_upper(double z = 1.96) const { return slope + z * slope_stderr; }
};

struct TailCurve
{
    std::vector<TailPoint> points;
    SlopeFit fit;
    bool fitted = false;
};

/*!
 * Weighted least squares of log p_hat on log r.
 *
 * Weights are inverse delta-method variances of log p_hat, i.e.
 * p_hat^2 / stderr^2. When any usable point has a zero standard error the
 * fit falls back to equal weights and a residual-based slope error. Points
 * with no hits are dropped; fewer than three usable points, or a grid with
 * a repeated r, is rejected with ParameterError.
 */
SlopeFit fit_loglog_slope(std::vector<TailPoint> const& points);

//! Fit in place and mark the curve as fitted.
void fit_loglog_slope(TailCurve& curve);

}  // namespace rde::analysis
