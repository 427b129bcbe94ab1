#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "analysis/statistics.hpp"
#include "analysis/sturm_liouville.hpp"
#include "core/errors.hpp"
#include "localtime/brownian.hpp"
#include "localtime/identities.hpp"
#include "localtime/rk2.hpp"
#include "sampling/replicas.hpp"

using namespace rde;
using namespace rde::localtime;
using sampling::RngStream;
using sampling::StreamFamily;

namespace
{
double exp_cdf(double x, double mean)
{
    return x <= 0 ? 0.0 : 1.0 - std::exp(-x / mean);
}
}  // namespace

TEST(Sigma, OccupationIdentityOnStoppedPaths)
{
    for (std::uint64_t id = 0; id < 5; ++id)
    {
        RngStream s(11, id);
        auto sp = simulate_to_sigma(1.0, 1e-4, 20.0, s);
        auto field = local_time_profile(sp.path, default_bandwidth(1e-4));
        double elapsed = sp.path.dt * static_cast<double>(sp.path.size() - 1);
        EXPECT_NEAR(field.integral() / elapsed, 1.0, 0.01);
        for (double v : field.values)
            EXPECT_GE(v, 0.0);
        EXPECT_DOUBLE_EQ(field.values.front(), 0.0);
        EXPECT_DOUBLE_EQ(field.values.back(), 0.0);
    }
}

TEST(Sigma, StopsAtFirstPassage)
{
    double const dt = 1e-4;
    for (std::uint64_t id = 0; id < 20; ++id)
    {
        RngStream s(3, id);
        auto sp = simulate_to_sigma(0.5, dt, 1e3, s);
        ASSERT_TRUE(sp.reached);
        auto const& v = sp.path.values;
        for (std::size_t k = 0; k + 1 < v.size(); ++k)
            EXPECT_LT(v[k], 0.5);
        EXPECT_LT(v.back(), 0.5 + 6 * std::sqrt(dt));
    }
    RngStream a(5, 9), b(5, 9);
    EXPECT_EQ(simulate_to_sigma(1, 1e-3, 100, a).sigma_time,
              simulate_to_sigma(1, 1e-3, 100, b).sigma_time);
}

TEST(Sigma, SurvivalDecaysLikeInverseSqrt)
{
    // P(sigma(1) > t) = P(|N(0, t)| < 1); at t = 4 and 16 the exact ratio is
    // erf(1/sqrt 8) / erf(1/sqrt 32) = 1.9403.
    std::size_t const n = 20000;
    StreamFamily fam{21, sampling::hash_name("sigma-tail")};
    auto times = sampling::draw_many(n, 1, fam, [](RngStream& s) {
        return simulate_to_sigma(1.0, 1e-2, 16.0 + 1e-9, s).sigma_time;
    });
    double above4 = 0, above16 = 0;
    for (double t : times)
    {
        above4 += t > 4;
        above16 += t > 16;
    }
    double ratio = above4 / above16;
    EXPECT_NEAR(ratio, 2.0, 0.2);
    EXPECT_NEAR(above4 / n, std::erf(1 / std::sqrt(8.0)), 0.015);
}

TEST(LocalTimeProfile, BandwidthWarning)
{
    ProcessPath p;
    p.dt = 1e-2;
    p.values = {0, 0.1, -0.1, 0.05};
    auto field = local_time_profile(p, 0.01);
    EXPECT_FALSE(field.diagnostics.empty());
    EXPECT_THROW(local_time_profile(p, 0.0), ParameterError);
}

TEST(RayKnightFirst, ZeroLevelIsExponentialMeanTwo)
{
    std::size_t const n = 2000;
    StreamFamily fam{1, sampling::hash_name("rk1-unit")};
    Rk1Options opts;
    auto samples = sampling::map_replicas<std::pair<double, double>>(
        n, 1, fam, [&](std::size_t, RngStream& s) {
            auto r = sample_rk1_levels(1.0, {0.0, 0.5}, opts, s);
            return std::pair{r.local_times[0], r.local_times[1]};
        });
    std::vector<double> l0, l5;
    for (auto [a, b] : samples)
    {
        l0.push_back(a);
        l5.push_back(b);
    }
    auto m = analysis::estimate_mean(l0);
    EXPECT_NEAR(m.mean, 2.0, 4 * m.std_error);
    auto thr = analysis::ks_critical_one_sample(n, 0.01);
    EXPECT_TRUE(analysis::ks_one_sample(l0, [](double x) { return exp_cdf(x, 2); }, thr).pass);
    // L^{1/2} is the reversed field at t = 1/2: BESQ(2) from 0, i.e. Exp(mean 1).
    EXPECT_TRUE(analysis::ks_one_sample(l5, [](double x) { return exp_cdf(x, 1); }, thr).pass);
}

TEST(RayKnightFirst, BrownianScaling)
{
    // L^{cx}_{sigma(c)} has the law of c L^x_{sigma(1)}; compared at x = 0.
    std::size_t const n = 1500;
    StreamFamily f1{2, sampling::hash_name("scale-1")};
    StreamFamily f2{2, sampling::hash_name("scale-2")};
    Rk1Options o1;
    o1.dt = 4e-4;
    Rk1Options o2 = o1;
    o2.dt = 4 * o1.dt;
    o2.bandwidth = 2 * default_bandwidth(o1.dt);
    o2.skip_below = 2 * o1.skip_below;
    auto a = sampling::draw_many(n, 1, f1, [&](RngStream& s) {
        return 2 * sample_rk1_levels(1.0, {0.0}, o1, s).local_times[0];
    });
    auto b = sampling::draw_many(n, 1, f2, [&](RngStream& s) {
        return sample_rk1_levels(2.0, {0.0}, o2, s).local_times[0];
    });
    auto thr = analysis::ks_critical_two_sample(n, n, 0.01);
    EXPECT_TRUE(analysis::ks_two_sample(a, b, thr).pass);
}

TEST(RayKnightSecond, FieldStartsAtEllAndIsAMartingale)
{
    std::size_t const n = 20000;
    StreamFamily fam{4, sampling::hash_name("rk2-field")};
    auto fields = sampling::map_replicas<ExactRKField>(
        n, 1, fam, [](std::size_t, RngStream& s) { return sample_rk2_field(1.0, 2.0, 0.05, s); });
    std::vector<double> at1, at2;
    for (auto const& f : fields)
    {
        ASSERT_EQ(f.values.front(), 1.0);
        at1.push_back(f.values[20]);
        at2.push_back(f.values.back());
        bool absorbed = false;
        for (double v : f.values)
        {
            if (absorbed)
                ASSERT_EQ(v, 0.0);
            absorbed = absorbed || v == 0;
        }
    }
    for (auto const* xs : {&at1, &at2})
    {
        auto m = analysis::estimate_mean(*xs);
        EXPECT_NEAR(m.mean, 1.0, 4 * m.std_error);
    }
}

TEST(RayKnightSecond, TruncationLevel)
{
    double x = rk2_truncation_level(1.0, 1e-4);
    EXPECT_NEAR(1 - std::exp(-1 / (2 * x)), 1e-4, 1e-12);
}

TEST(GetoorSharpe, ExactCases)
{
    StreamFamily fam{1, 5};
    auto z0 = getoor_sharpe_check(0, 0.7, 100, fam, 1);
    EXPECT_NEAR(z0.mc_estimate, std::exp(0.7), 1e-14);
    EXPECT_LT(z0.rel_error, 1e-14);
    auto u0 = getoor_sharpe_check(0.3, 0, 100, fam, 1);
    EXPECT_DOUBLE_EQ(u0.mc_estimate, 1.0);
    EXPECT_DOUBLE_EQ(u0.closed_form, 1.0);
    EXPECT_THROW(getoor_sharpe_check(1, 0.5, 100, fam, 1), DomainError);
}

TEST(GetoorSharpe, MonteCarloWithinErrorBars)
{
    auto r = getoor_sharpe_check(0.5, 0.5, 200000, StreamFamily{3, 7}, 1);
    EXPECT_NEAR(r.closed_form, std::numbers::e, 1e-14);
    EXPECT_NEAR(r.mc_estimate, r.closed_form, 4 * r.mc_stderr);
    EXPECT_NEAR(r.conditional_estimate, r.closed_form, 0.01);
}

TEST(BianeYor, ScaleConstant)
{
    EXPECT_NEAR(biane_yor_scale(0.5), 0.25, 1e-14);
}

TEST(BianeYor, StableIdentitySmall)
{
    auto r = biane_yor_stable_check(0.5, 1.0, 4000, 0.0, StreamFamily{8, 1}, 1);
    EXPECT_LT(r.ks.statistic, analysis::ks_critical_two_sample(4000, 4000, 0.01));
}

TEST(BianeYor, LambdaScaling)
{
    std::size_t const n = 4000;
    auto one = biane_yor_functional(0.5, 1.0, n, StreamFamily{9, 1}, 1);
    auto two = biane_yor_functional(0.5, 2.0, n, StreamFamily{9, 2}, 1);
    for (auto& v : one.values)
        v *= 4;  // 2^{1/p}
    auto thr = analysis::ks_critical_two_sample(n, n, 0.01);
    EXPECT_TRUE(analysis::ks_two_sample(one.values, two.values, thr).pass);
}

TEST(Cauchy, CenteringConstants)
{
    double g = std::numbers::egamma;
    EXPECT_NEAR(cauchy_centering(), std::log(std::numbers::pi / 4) - 2 * g, 1e-15);
    EXPECT_NEAR(cauchy_centering_plus_euler() - cauchy_centering(), 4 * g, 1e-14);
}

TEST(Cauchy, IdentitySmallAndGridStability)
{
    std::size_t const n = 4000;
    auto r = cauchy_identity_check(n, 0.0, StreamFamily{10, 1}, 1);
    EXPECT_LT(r.ks.statistic, analysis::ks_critical_two_sample(n, n, 0.01));
    // The +2 gamma location is far off at any reasonable n.
    EXPECT_GT(r.statistic_plus_euler, 0.25);

    FunctionalOptions fine;
    fine.integrator.rel_x /= 2;
    fine.integrator.rel_z /= 2;
    fine.integrator.x_start = 5e-9;
    auto coarse = cauchy_functional(n, StreamFamily{10, 2}, 1);
    auto refined = cauchy_functional(n, StreamFamily{10, 2}, 1, fine);
    // The median of the limit law has density about 1 / pi^2 around it, so
    // its standard error at n draws is pi^2 / (2 sqrt n).
    double se = std::numbers::pi * std::numbers::pi / (2 * std::sqrt(double(n)));
    EXPECT_NEAR(analysis::median(coarse.values), analysis::median(refined.values),
                3 * std::sqrt(2.0) * se);
}

TEST(SturmLiouville, MonteCarloAgreesWithOde)
{
    auto mc = weighted_local_time_laplace(0.1, 0.1, 0.5, 20000, StreamFamily{12, 1}, 1);
    auto sol = analysis::solve_sturm_liouville(0.1, 0.1, 0.5);
    double target = std::exp(sol.phi_prime_at_zero / 2);
    EXPECT_NEAR(mc.estimate, target, std::max(4 * mc.std_error, 0.02 * target));
}
