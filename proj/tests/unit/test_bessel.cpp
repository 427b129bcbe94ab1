#include <algorithm>
#include <cmath>
#include <vector>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <gtest/gtest.h>

#include "analysis/statistics.hpp"
#include "bessel/besq.hpp"
#include "bessel/dufresne.hpp"
#include "bessel/lamperti.hpp"
#include "bessel/perpetuity.hpp"
#include "core/errors.hpp"
#include "sampling/paths.hpp"

namespace rde::bessel
{
namespace test
{
using sampling::StreamFamily;

TEST(BesqStep, ZeroIsAbsorbingInDimensionZero)
{
    RngStream s(1, 0);
    for (double dt : {1e-4, 0.5, 10.0})
        EXPECT_EQ(0.0, besq_step(0, 0, dt, s));
    EXPECT_EQ(0.0, besq_step(0, -2, 0.1, s));
}

TEST(BesqStep, MeanGrid)
{
    // E X_t = x + d t, checked to 4 standard errors.
    RngStream s(2, 0);
    constexpr int n = 200000;
    struct Case
    {
        double x, d, t;
    };
    for (auto c : {Case{1, 0, 0.5}, Case{4, 2, 1}, Case{0, 3, 2}, Case{2, 0.5, 0.1}})
    {
        std::vector<double> v(n);
        for (auto& x : v)
            x = besq_step(c.x, c.d, c.t, s);
        auto m = analysis::estimate_mean(v);
        EXPECT_NEAR(c.x + c.d * c.t, m.mean, 4 * m.std_error)
            << c.x << " " << c.d << " " << c.t;
    }
}

TEST(BesqStep, ZeroAbsorptionProbability)
{
    // P(BESQ0 from x is 0 at t) = exp(-x / (2t)).
    RngStream s(3, 0);
    constexpr int n = 200000;
    int zeros = 0;
    for (int i = 0; i < n; ++i)
        zeros += besq_step(1.0, 0, 0.5, s) == 0;
    double p = std::exp(-1.0);
    EXPECT_NEAR(p, double(zeros) / n, 4 * std::sqrt(p * (1 - p) / n));
}

TEST(SimulateBesq, AbsorptionPropagates)
{
    RngStream s(4, 0);
    auto path = simulate_besq({0, 0.05}, 5, 1e-2, s);
    ASSERT_TRUE(path.absorbed_at.has_value());
    auto first = static_cast<std::size_t>(std::ceil(*path.absorbed_at / path.dt - 1e-9));
    for (std::size_t i = first; i < path.size(); ++i)
        EXPECT_EQ(0.0, path.values[i]);
    auto neg = simulate_besq({-2, 0.05}, 5, 1e-3, s);
    ASSERT_TRUE(neg.absorbed_at.has_value());
    EXPECT_GT(*neg.absorbed_at, 0);
}

TEST(BesqAdditivity, SumMatchesJointDimension)
{
    StreamFamily fam{5, 1};
    constexpr int n = 50000;
    std::vector<double> sum(n), joint(n);
    for (int i = 0; i < n; ++i)
    {
        auto s = fam.at(i);
        sum[i] = besq_step(0, 2, 1, s) + besq_step(4, 6, 1, s);
        joint[i] = besq_step(4, 8, 1, s);
    }
    auto ks = analysis::ks_two_sample(sum, joint, 0.02);
    EXPECT_TRUE(ks.pass) << ks.statistic;
}

//---------------------------------------------------------------------------//
TEST(Dufresne, DensityValues)
{
    EXPECT_NEAR(4 * std::exp(-2.0), dufresne_density(1, 2), 1e-15);
    EXPECT_LT(dufresne_density(1e-3, 2), 1e-300);
    EXPECT_THROW(dufresne_density(0, 2), DomainError);
}

TEST(Dufresne, Normalization)
{
    boost::math::quadrature::exp_sinh<double> integrator;
    for (double k : {0.5, 2.0, 3.0})
    {
        auto f = [k](double x) { return x > 0 ? dufresne_density(x, k) : 0.0; };
        EXPECT_NEAR(1.0, integrator.integrate(f, 0.0, INFINITY), 1e-6) << k;
        EXPECT_NEAR(1.0, dufresne_cdf(INFINITY, k), 1e-10) << k;
    }
}

TEST(Dufresne, CdfMatchesIncompleteGamma)
{
    // P(2/G <= x) = Q(kappa, 2/x); for kappa = 2 this is e^-y (1 + y).
    for (double x : {0.1, 0.5, 1.0, 2.0, 10.0, 100.0})
    {
        double y = 2 / x;
        EXPECT_NEAR(std::exp(-y) * (1 + y), dufresne_cdf(x, 2), 1e-10) << x;
        EXPECT_NEAR(boost::math::gamma_q(3.5, y), dufresne_cdf(x, 3.5), 1e-10) << x;
    }
    std::vector<double> sorted{0.05, 0.3, 0.3, 1.2, 7.0, 50.0};
    auto cum = dufresne_cdf_sorted(sorted, 2);
    for (std::size_t i = 0; i < sorted.size(); ++i)
        EXPECT_NEAR(dufresne_cdf(sorted[i], 2), cum[i], 1e-10);
}

TEST(SInfinity, PositiveAndCentered)
{
    StreamFamily fam{6, 2};
    constexpr int n = 20000;
    std::vector<double> xs(n);
    for (int i = 0; i < n; ++i)
    {
        auto s = fam.at(i);
        xs[i] = sample_s_infinity(3, s);
        ASSERT_GT(xs[i], 0);
    }
    // kappa = 3: 1/S ~ Gamma(3, rate 2), mean 1 with finite variance 1.
    auto m = analysis::estimate_mean(xs);
    EXPECT_NEAR(1.0, m.mean, 4 * m.std_error);
    auto ks = analysis::ks_one_sample_sorted(
        xs, [](auto const& v) { return dufresne_cdf_sorted(v, 3); }, 0.02);
    EXPECT_TRUE(ks.pass) << ks.statistic;
}

TEST(SupLaw, RoughOneOverU)
{
    StreamFamily fam{7, 3};
    constexpr int n = 4000;
    int above = 0;
    for (int i = 0; i < n; ++i)
    {
        auto s = fam.at(i);
        above += besq0_running_max(1, 4, 1e-3, s) > 4;
    }
    double p = 0.25;
    EXPECT_NEAR(p, double(above) / n, 4 * std::sqrt(p * (1 - p) / n));
}

//---------------------------------------------------------------------------//
TEST(Lamperti, ConstantPath)
{
    ProcessPath b;
    b.dt = 0.01;
    b.values.assign(101, 0.0);
    auto res = lamperti_transform(b, 0);
    for (std::size_t i = 0; i < b.size(); ++i)
    {
        EXPECT_NEAR(b.time(i), res.r_on_clock.clock[i], 1e-12);
        EXPECT_EQ(2.0, res.r_on_clock.values[i]);
    }
}

TEST(Lamperti, PathwiseIdentity)
{
    RngStream s(8, 0);
    auto b = sampling::brownian_path(2, 1e-3, s);
    auto res = lamperti_transform(b, 2);
    EXPECT_LT(res.max_residual, 1e-12);
    for (std::size_t i = 1; i < b.size(); ++i)
        ASSERT_GT(res.r_on_clock.clock[i], res.r_on_clock.clock[i - 1]);
}

TEST(Lamperti, RejectsOffsetStart)
{
    ProcessPath b;
    b.values = {1.0, 1.0};
    EXPECT_THROW(lamperti_transform(b, 0), ParameterError);
}

//---------------------------------------------------------------------------//
TEST(Perpetuity, MeanAndPositivity)
{
    StreamFamily fam{9, 4};
    constexpr int n = 3000;
    std::vector<double> ys(n);
    int flagged = 0;
    for (int i = 0; i < n; ++i)
    {
        auto s = fam.at(i);
        auto draw = sample_perpetuity(6, 4, 1e6, s);
        ASSERT_GT(draw.value, 0);
        EXPECT_TRUE(draw.stopped_quiet);
        flagged += draw.horizon_flag;
        ys[i] = draw.value;
    }
    EXPECT_LE(flagged, n / 200);
    EXPECT_DOUBLE_EQ(1.0 / 16, perpetuity_scale(4));
    EXPECT_DOUBLE_EQ(2.0, perpetuity_index(6, 4));
    auto m = analysis::estimate_mean(ys);
    EXPECT_NEAR(0.125, m.mean, 4 * m.std_error + 0.005);
}

TEST(Perpetuity, ShortHorizonIsFlagged)
{
    RngStream s(10, 0);
    auto draw = sample_perpetuity(6, 4, 0.5, s);
    EXPECT_FALSE(draw.stopped_quiet);
    EXPECT_TRUE(draw.horizon_flag);
}

}  // namespace test
}  // namespace rde::bessel
