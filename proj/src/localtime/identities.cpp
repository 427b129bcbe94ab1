#include "identities.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "core/errors.hpp"
#include "sampling/distributions.hpp"
#include "sampling/replicas.hpp"
#include "sampling/stable.hpp"

namespace rde::localtime
{
namespace
{
double truncation_for(double ell, FunctionalOptions const& opts)
{
    return rk2_truncation_level(ell, opts.alive_tolerance);
}

FunctionalSample collect(std::vector<Rk2Integral> const& parts)
{
    FunctionalSample out;
    out.values.reserve(parts.size());
    for (auto const& p : parts)
    {
        out.values.push_back(p.value);
        out.truncated += !p.absorbed;
    }
    return out;
}
}  // namespace

//---------------------------------------------------------------------------//
GetoorSharpeResult getoor_sharpe_check(double z, double u, std::size_t n,
                                       StreamFamily const& fam, unsigned workers)
{
    RDE_REQUIRE(z >= 0 && u >= 0, ParameterError,
                "getoor_sharpe_check: need z >= 0 and u >= 0");
    RDE_REQUIRE(2 * u * z < 1, DomainError,
                "getoor_sharpe_check: the transform diverges for 2uz >= 1");
    RDE_REQUIRE(n >= 2, ParameterError, "getoor_sharpe_check: need n >= 2");

    GetoorSharpeResult res;
    res.n = n;
    res.closed_form = std::exp(u / (1 - 2 * u * z));

    // L^z_{tau(1)} is BESQ0 from 1 at time z: K ~ Poisson(1/(2z)) and, given
    // K, L ~ Gamma(K, scale 2z). This is the same draw besq_step makes, with
    // K kept so the conditional mean (1 - 2uz)^(-K) can be reported.
    auto pairs = sampling::draw_many<std::pair<double, double>>(
        n, workers, fam, [z, u](sampling::RngStream& s) {
            if (z == 0)
                return std::pair{std::exp(u), std::exp(u)};
            auto k = sampling::draw_poisson(s, 1 / (2 * z));
            double l = sampling::draw_gamma(s, static_cast<double>(k), 2 * z);
            double cond = std::pow(1 - 2 * u * z, -static_cast<double>(k));
            return std::pair{std::exp(u * l), cond};
        });
    std::vector<double> plain(n), cond(n);
    for (std::size_t i = 0; i < n; ++i)
    {
        plain[i] = pairs[i].first;
        cond[i] = pairs[i].second;
    }
    auto m = analysis::estimate_mean(plain);
    res.mc_estimate = m.mean;
    res.mc_stderr = m.std_error;
    auto mc = analysis::estimate_mean(cond);
    res.conditional_estimate = mc.mean;
    res.conditional_stderr = mc.std_error;
    res.rel_error = std::fabs(res.mc_estimate - res.closed_form) / res.closed_form;
    return res;
}

//---------------------------------------------------------------------------//
double biane_yor_scale(double p)
{
    RDE_REQUIRE(p > 0 && p < 1, ParameterError,
                "biane_yor_scale: p must lie in (0, 1)");
    double g = std::tgamma(p);
    double psi = std::pow(std::numbers::pi * p
                              / (4 * g * g * std::sin(0.5 * std::numbers::pi * p)),
                          1 / p);
    return 2 * std::pow(p, 2 - 2 / p) * psi;
}

FunctionalSample biane_yor_functional(double p, double lambda, std::size_t n,
                                      StreamFamily const& fam, unsigned workers,
                                      FunctionalOptions opts)
{
    RDE_REQUIRE(p > 0 && p < 1 && lambda > 0, ParameterError,
                "biane_yor_functional: need p in (0, 1) and lambda > 0");
    double const power = 1 / p - 2;
    double const x_max = truncation_for(lambda, opts);
    double const x0 = opts.integrator.x_start;
    std::vector<Rk2Segment> segments{
        {x_max, [power](double x, double zv) {
             return power == 0 ? zv : (x > 0 ? std::pow(x, power) * zv : 0.0);
         }, {}}};
    // Below the first visited level the field is lambda up to O(sqrt(x0));
    // the weight integrates to x0^(1/p - 1) / (1/p - 1).
    double head = x0 > 0 ? lambda * std::pow(x0, power + 1) / (power + 1) : 0.0;
    if (power < 0)
        RDE_REQUIRE(x0 > 0, ParameterError,
                    "biane_yor_functional: p > 1/2 needs a positive start level");
    auto parts = sampling::map_replicas<Rk2Integral>(
        n, workers, fam, [&](std::size_t, sampling::RngStream& s) {
            auto r = integrate_rk2_field(lambda, segments, opts.integrator, s);
            r.value += head;
            return r;
        });
    return collect(parts);
}

KsCheckResult biane_yor_stable_check(double p, double lambda, std::size_t n,
                                     double threshold, StreamFamily const& fam,
                                     unsigned workers, FunctionalOptions opts)
{
    KsCheckResult out;
    auto f = biane_yor_functional(p, lambda, n, fam, workers, opts);
    out.lhs = std::move(f.values);
    out.truncated = f.truncated;
    double scale = biane_yor_scale(p) * std::pow(lambda, 1 / p);
    sampling::StableLawSpec spec(p);
    StreamFamily target{fam.seed, sampling::mix64(fam.domain ^ 0x5354)};
    out.rhs = sampling::draw_many(n, workers, target, [&](sampling::RngStream& s) {
        return scale * sampling::draw_stable(spec, s);
    });
    out.ks = analysis::ks_two_sample(out.lhs, out.rhs, threshold);
    return out;
}

//---------------------------------------------------------------------------//
FunctionalSample cauchy_functional(std::size_t n, StreamFamily const& fam,
                                   unsigned workers, FunctionalOptions opts)
{
    if (opts.integrator.x_start <= 0)
        opts.integrator.x_start = 1e-8;
    RDE_REQUIRE(opts.integrator.x_start < 1, ParameterError,
                "cauchy_functional: start level must be below 1");
    double const x_max = truncation_for(1.0, opts);
    std::vector<Rk2Segment> segments{
        {1.0, [](double x, double zv) { return (zv - 1) / x; },
         [](double a, double b) { return -std::log(b / a); }},
        {x_max, [](double x, double zv) { return zv / x; }, {}}};
    auto parts = sampling::map_replicas<Rk2Integral>(
        n, workers, fam, [&](std::size_t, sampling::RngStream& s) {
            return integrate_rk2_field(1.0, segments, opts.integrator, s);
        });
    return collect(parts);
}

double cauchy_centering()
{
    return std::log(std::numbers::pi / 4) - 2 * std::numbers::egamma;
}

double cauchy_centering_plus_euler()
{
    return std::log(std::numbers::pi / 4) + 2 * std::numbers::egamma;
}

CauchyCheckResult cauchy_identity_check(std::size_t n, double threshold,
                                    StreamFamily const& fam, unsigned workers,
                                    FunctionalOptions opts)
{
    CauchyCheckResult out;
    auto f = cauchy_functional(n, fam, workers, opts);
    out.lhs = std::move(f.values);
    out.truncated = f.truncated;
    double const shift = cauchy_centering();
    StreamFamily target{fam.seed, sampling::mix64(fam.domain ^ 0x4331)};
    out.rhs = sampling::draw_many(n, workers, target, [&](sampling::RngStream& s) {
        return shift + 0.5 * std::numbers::pi * sampling::draw_cauchy_asym(s);
    });
    out.ks = analysis::ks_two_sample(out.lhs, out.rhs, threshold);
    auto moved = out.rhs;
    for (auto& v : moved)
        v += cauchy_centering_plus_euler() - shift;
    out.statistic_plus_euler = analysis::ks_two_sample(out.lhs, moved, threshold).statistic;
    return out;
}

//---------------------------------------------------------------------------//
LaplaceMcResult weighted_local_time_laplace(double lambda, double epsilon,
                                            double gamma, std::size_t n,
                                            StreamFamily const& fam,
                                            unsigned workers,
                                            FunctionalOptions opts)
{
    RDE_REQUIRE(lambda > 0 && epsilon > 0 && gamma > 0, ParameterError,
                "weighted_local_time_laplace: lambda, epsilon, gamma > 0");
    opts.integrator.x_start = epsilon;
    double const x_max = std::max(truncation_for(1.0, opts), 2 * epsilon);
    double const power = -1 - gamma;
    std::vector<Rk2Segment> segments{
        {x_max, [power](double y, double zv) { return std::pow(y, power) * zv; }, {}}};
    auto parts = sampling::map_replicas<Rk2Integral>(
        n, workers, fam, [&](std::size_t, sampling::RngStream& s) {
            return integrate_rk2_field(1.0, segments, opts.integrator, s);
        });
    std::vector<double> weights(n);
    LaplaceMcResult out;
    for (std::size_t i = 0; i < n; ++i)
    {
        weights[i] = std::exp(-lambda * parts[i].value);
        out.truncated += !parts[i].absorbed;
    }
    auto m = analysis::estimate_mean(weights);
    out.estimate = m.mean;
    out.std_error = m.std_error;
    return out;
}

}  // namespace rde::localtime
