#include "warren_yor.hpp"

#include <algorithm>
#include <cmath>

#include "bessel/besq.hpp"
#include "core/errors.hpp"
#include "sampling/replicas.hpp"

namespace rde::jacobi
{
namespace
{
struct WyDraw
{
    double ratio = 0;
    double jacobi = 0;
    double sum = 0;
    double direct = 0;
    bool shortfall = false;
};
}  // namespace

WarrenYorResult warren_yor_check(double kappa, double s_star, std::size_t n,
                                 StreamFamily const& fam, unsigned workers,
                                 WarrenYorOptions const& opts)
{
    RDE_REQUIRE(kappa > 0, ParameterError, "warren_yor_check: kappa must be > 0");
    RDE_REQUIRE(s_star > 0, ParameterError, "warren_yor_check: s* must be > 0");
    double const d1 = 2, d2 = 2 + 2 * kappa;
    double const dt = opts.besq_dt;

    auto draws = sampling::map_replicas<WyDraw>(
        n, workers, fam, [&](std::size_t, sampling::RngStream& s) {
            WyDraw out;
            double x1 = 0, x2 = 4, clock = 0, t = 0;
            double ratio = 0;
            bool reached = false;
            while (t < opts.horizon)
            {
                double y1 = bessel::besq_step(x1, d1, dt, s);
                double y2 = bessel::besq_step(x2, d2, dt, s);
                double dc = 0.5 * dt * (1 / (x1 + x2) + 1 / (y1 + y2));
                double next_ratio = y1 / (y1 + y2);
                if (clock + dc >= s_star)
                {
                    double w = (s_star - clock) / dc;
                    ratio = (1 - w) * (x1 / (x1 + x2)) + w * next_ratio;
                    reached = true;
                    break;
                }
                clock += dc;
                x1 = y1;
                x2 = y2;
                t += dt;
            }
            out.shortfall = !reached;
            out.ratio = reached ? ratio : x1 / (x1 + x2);

            JacobiWalker w(d1, d2, 0.0, opts.jacobi_dt, opts.step);
            while (w.t() < s_star)
                w.advance(s_star, s);
            out.jacobi = w.y();

            out.sum = bessel::besq_step(0, d1, opts.sum_time, s)
                      + bessel::besq_step(4, d2, opts.sum_time, s);
            out.direct = bessel::besq_step(4, d1 + d2, opts.sum_time, s);
            return out;
        });

    WarrenYorResult res;
    std::vector<double> sums, direct;
    for (auto const& d : draws)
    {
        res.ratio.push_back(d.ratio);
        res.jacobi.push_back(d.jacobi);
        sums.push_back(d.sum);
        direct.push_back(d.direct);
        res.shortfalls += d.shortfall;
    }
    res.ratio_ks = analysis::ks_two_sample(res.ratio, res.jacobi, opts.threshold);
    res.sum_ks = analysis::ks_two_sample(sums, direct, opts.threshold);
    return res;
}

double lambda_clock(ProcessPath const& r1_sq, ProcessPath const& r2_sq, double r)
{
    RDE_REQUIRE(r >= 0, ParameterError, "lambda_clock: r must be >= 0");
    RDE_REQUIRE(r1_sq.size() == r2_sq.size() && r1_sq.dt == r2_sq.dt
                    && r1_sq.t0 == r2_sq.t0,
                ParameterError, "lambda_clock: paths must share a time grid");
    RDE_REQUIRE(!r1_sq.values.empty() && r1_sq.end_time() >= r - 1e-12 * std::max(1.0, r),
                ParameterError, "lambda_clock: paths do not cover [0, r]");
    auto rate = [&](std::size_t i) {
        return 1 / (r1_sq.values[i] + r2_sq.values[i]);
    };
    double total = 0;
    double prev = rate(0);
    for (std::size_t i = 1; i < r1_sq.size(); ++i)
    {
        double a = r1_sq.time(i - 1);
        if (a >= r)
            break;
        double b = std::min(r1_sq.time(i), r);
        double cur = b < r1_sq.time(i) ? 1 / (r1_sq.at(b) + r2_sq.at(b)) : rate(i);
        total += 0.5 * (b - a) * (prev + cur);
        prev = cur;
    }
    return total;
}

double sample_lambda_clock(double kappa, double r, sampling::RngStream& stream,
                           double rel)
{
    RDE_REQUIRE(kappa > 0 && r >= 0 && rel > 0, ParameterError,
                "sample_lambda_clock: need kappa > 0, r >= 0, rel > 0");
    double const d = 4 + 2 * kappa;
    double x = 4, t = 0, total = 0;
    while (t < r)
    {
        double h = std::min(std::max(rel * x, 1e-12), r - t);
        double y = bessel::besq_step(x, d, h, stream);
        total += 0.5 * h * (1 / x + 1 / y);
        x = y;
        t += h;
    }
    return total;
}

}  // namespace rde::jacobi
