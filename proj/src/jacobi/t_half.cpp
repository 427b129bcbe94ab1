#include "t_half.hpp"

#include <cmath>
#include <limits>

#include "analysis/statistics.hpp"
#include "core/errors.hpp"
#include "sampling/replicas.hpp"

namespace rde::jacobi
{
THalfDraw sample_t_half(double kappa, RngStream& stream, THalfOptions const& opts)
{
    RDE_REQUIRE(kappa > 0, ParameterError, "sample_t_half: kappa must be > 0");
    RDE_REQUIRE(opts.y0_start > 0 && opts.y0_start < 0.5, ParameterError,
                "sample_t_half: start must lie in (0, 1/2)");
    JacobiWalker w(2, 2 + 2 * kappa, opts.y0_start, opts.dt, opts.step);
    THalfDraw out;
    while (w.t() < opts.horizon)
    {
        double y0 = w.y(), t0 = w.t();
        double h = w.advance(opts.horizon, stream);
        double y1 = w.y();
        if (y1 >= 0.5)
        {
            out.time = t0 + h * (0.5 - y0) / (y1 - y0);
            out.reached = true;
            return out;
        }
        double var = 4 * y0 * (1 - y0) * h;
        if (var > 0 && stream.uniform() < std::exp(-2 * (0.5 - y0) * (0.5 - y1) / var))
        {
            out.time = t0 + h;
            out.reached = true;
            return out;
        }
    }
    out.time = w.t();
    return out;
}

analysis::SeriesValue t_half_moment_series(double kappa, int n_terms)
{
    RDE_REQUIRE(kappa > 0, ParameterError, "t_half_moment_series: kappa must be > 0");
    RDE_REQUIRE(n_terms >= 1, ParameterError, "t_half_moment_series: need n_terms >= 1");
    // t_1 = Gamma(2 + kappa) / Gamma(2 + kappa) / 2 = 1/2.
    double term = 0.5;
    double sum = term;
    for (int n = 1; n < n_terms; ++n)
    {
        double dn = n;
        term *= (1 + dn + kappa) / (2 * (dn + 1)) * dn / (dn + 1);
        sum += term;
    }
    analysis::SeriesValue out;
    out.terms = n_terms;
    out.value = 0.5 * sum;
    double big_n = n_terms;
    double rho = (big_n + 1 + kappa) / (2 * (big_n + 1));
    double next = term * (1 + big_n + kappa) / (2 * (big_n + 1)) * big_n / (big_n + 1);
    out.remainder_bound = rho < 1 ? 0.5 * next / (1 - rho)
                                  : std::numeric_limits<double>::infinity();
    return out;
}

THalfMeanCheck t_half_mean_check(double kappa, std::size_t n,
                                 StreamFamily const& fam, unsigned workers,
                                 THalfOptions const& opts)
{
    auto draws = sampling::map_replicas<THalfDraw>(
        n, workers, fam,
        [&](std::size_t, RngStream& s) { return sample_t_half(kappa, s, opts); });
    std::vector<double> times;
    THalfMeanCheck out;
    for (auto const& d : draws)
    {
        times.push_back(d.time);
        out.shortfalls += !d.reached;
    }
    auto m = analysis::estimate_mean(times);
    out.mean = m.mean;
    out.std_error = m.std_error;
    out.series = t_half_moment_series(kappa, 200).value;
    out.rel_error = std::fabs(out.mean - out.series) / out.series;
    return out;
}

double t_half_laplace_closed_form(double kappa, double theta)
{
    RDE_REQUIRE(kappa > 0 && theta >= 0, ParameterError,
                "t_half_laplace: need kappa > 0 and theta >= 0");
    double disc = (1 + kappa) * (1 + kappa) - 4 * theta;
    RDE_REQUIRE(disc >= 0, DomainError,
                "t_half_laplace: theta > (1 + kappa)^2 / 4 gives complex a, b");
    double a = 0.5 * (1 + kappa + std::sqrt(disc));
    double b = 0.5 * (1 + kappa - std::sqrt(disc));
    return 1 / analysis::hypergeom_2f1(a, b, 1, 0.5).value;
}

LaplaceCheck hypergeom_laplace_check(double kappa, double theta, std::size_t n,
                                     StreamFamily const& fam, unsigned workers,
                                     THalfOptions const& opts)
{
    LaplaceCheck out;
    out.closed_form = t_half_laplace_closed_form(kappa, theta);
    double root = std::sqrt((1 + kappa) * (1 + kappa) - 4 * theta);
    out.a = 0.5 * (1 + kappa + root);
    out.b = 0.5 * (1 + kappa - root);
    auto draws = sampling::map_replicas<THalfDraw>(
        n, workers, fam,
        [&](std::size_t, RngStream& s) { return sample_t_half(kappa, s, opts); });
    std::vector<double> vals;
    for (auto const& d : draws)
    {
        vals.push_back(std::exp(-2 * theta * d.time));
        out.shortfalls += !d.reached;
    }
    auto m = analysis::estimate_mean(vals);
    out.mc = m.mean;
    out.std_error = m.std_error;
    out.rel_error = std::fabs(out.mc - out.closed_form) / out.closed_form;
    return out;
}

}  // namespace rde::jacobi
