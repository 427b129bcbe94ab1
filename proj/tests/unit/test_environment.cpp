#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <sstream>

#include "analysis/statistics.hpp"
#include "core/errors.hpp"
#include "environment/environment.hpp"
#include "environment/experiments.hpp"
#include "environment/walk.hpp"
#include "sampling/replicas.hpp"

using namespace rde;
using namespace rde::environment;
using sampling::RngStream;
using sampling::StreamFamily;

namespace
{
// W(x) = slope * x on [-extent, extent].
Environment linear_env(double slope, double extent, double h = 1e-3)
{
    auto n = static_cast<std::size_t>(std::llround(extent / h));
    std::vector<double> left(n + 1), right(n + 1);
    for (std::size_t k = 0; k <= n; ++k)
    {
        right[k] = slope * static_cast<double>(k) * h;
        left[k] = -slope * static_cast<double>(k) * h;
    }
    return Environment::frozen(1, h, std::move(left), std::move(right));
}
}  // namespace

TEST(Environment, IncrementLaw)
{
    double const kappa = 2;
    auto w = parallel_map<std::array<double, 2>>(20000, 1, [&](std::size_t i) {
        auto env = sample_environment(kappa, 1, 1e-3, RngStream(1, i));
        EXPECT_EQ(env.w_at(0), 0.0);
        return std::array<double, 2>{env.w_at(1000), env.w_at(-1000)};
    });
    std::vector<double> right, left;
    for (auto const& p : w)
    {
        right.push_back(p[0]);
        left.push_back(p[1]);
    }
    auto mr = analysis::estimate_mean(right);
    auto ml = analysis::estimate_mean(left);
    EXPECT_NEAR(mr.mean, -kappa / 2, 4 * mr.std_error);
    EXPECT_NEAR(ml.mean, kappa / 2, 4 * ml.std_error);
    double var = 0;
    for (double x : right)
        var += (x - mr.mean) * (x - mr.mean);
    var /= static_cast<double>(right.size() - 1);
    EXPECT_NEAR(var, 1.0, 0.02);
}

TEST(Environment, ExtensionOrderDoesNotMatter)
{
    RngStream s(2, 5);
    Environment a(1.5, 1e-3, s, 0);
    Environment b(1.5, 1e-3, s, 30);
    a.ensure(-20000);
    double wa = a.w(25000);
    EXPECT_EQ(wa, b.w_at(25000));
    EXPECT_EQ(a.w(-20000), b.w_at(-20000));
}

TEST(Environment, FrozenBreachThrows)
{
    auto env = linear_env(0, 1);
    EXPECT_THROW(env.w(1001), DomainError);
    EXPECT_THROW(env.w_at(-1001), DomainError);
    EXPECT_NO_THROW(env.w(1000));
}

TEST(Environment, SnapshotRoundTrip)
{
    auto env = sample_environment(2, 0.5, 1e-2, RngStream(3, 0));
    std::stringstream buf;
    write_snapshot(env, buf);
    auto back = read_snapshot(buf);
    ASSERT_EQ(back.lo(), env.lo());
    ASSERT_EQ(back.hi(), env.hi());
    EXPECT_EQ(back.kappa(), 2.0);
    for (std::int64_t n = env.lo(); n <= env.hi(); n += 37)
        EXPECT_EQ(back.w_at(n), env.w_at(n));
    std::stringstream bad("x W\n0 0\n");
    EXPECT_THROW(read_snapshot(bad), OperationalError);
}

TEST(Scales, FlatPotential)
{
    auto env = linear_env(0, 2);
    auto sc = build_scales(env);
    EXPECT_TRUE(sc.diagnostics.empty());
    for (double x : {-1.7, -0.3, 0.0, 0.25, 1.9})
    {
        EXPECT_NEAR(sc.S(x), x, 1e-12);
        EXPECT_NEAR(sc.Sigma(x), x, 1e-12);
    }
}

TEST(Scales, RoundTripAndMonotone)
{
    auto env = sample_environment(2, 5, 1e-3, RngStream(4, 0));
    auto sc = build_scales(env);
    auto const& xs = sc.S.nodes();
    for (std::size_t i = 0; i < xs.size(); i += 13)
        EXPECT_NEAR(sc.S.inverse(sc.S(xs[i])), xs[i], 1e-12);
    auto const& sig = sc.Sigma.values();
    for (std::size_t i = 1; i < sig.size(); ++i)
        ASSERT_GT(sig[i], sig[i - 1]);
    // Log-domain Sigma agrees with the direct sum where both are finite.
    EXPECT_NEAR(log_sigma(env, 4.0), std::log(sc.Sigma(4.0)), 1e-10);
}

TEST(Scales, OverflowIsReportedNotHidden)
{
    auto env = linear_env(-2, 400, 1e-2);
    auto sc = build_scales(env);
    EXPECT_FALSE(sc.diagnostics.empty());
    EXPECT_LT(sc.Sigma.x_max(), 400.0);
    EXPECT_NEAR(log_sigma(env, 390.0), 780 - std::log(2.0), 1e-3);
}

TEST(Scales, SInfinityDufresneMean)
{
    auto r = s_infinity_check(2, 4000, StreamFamily{5, 1}, 1, 1.0);
    EXPECT_NEAR(r.mean.mean, 2.0, 4 * r.mean.std_error);
    EXPECT_LT(r.ks.statistic, analysis::ks_critical_one_sample(4000, 0.01));
}

TEST(Chain, FlatCellsAreSymmetric)
{
    auto env = linear_env(0, 1);
    CellChain chain(env, 0.05);
    auto const& nd = chain.node(3);
    EXPECT_NEAR(nd.q, 0.5, 1e-14);
    EXPECT_NEAR(nd.hold_left, 0.05 * 0.05 / 2, 1e-12);
    EXPECT_NEAR(nd.hold_right, 0.05 * 0.05 / 2, 1e-12);
    EXPECT_THROW(CellChain(env, 0.0505), ParameterError);
}

TEST(Walk, DriftedBrownianMotion)
{
    // W = -x: X is Brownian motion with drift 1/2, so E H(r) = 2 r.
    auto env = linear_env(-1, 60);
    double const r = 5;
    auto hs = sampling::draw_many(2000, 1, StreamFamily{6, 1}, [&](RngStream& s) {
        return hitting_time(env, r, s).H;
    });
    auto m = analysis::estimate_mean(hs);
    EXPECT_NEAR(m.mean, 2 * r, 4 * m.std_error);
    auto xs = sampling::draw_many(2000, 1, StreamFamily{6, 2}, [&](RngStream& s) {
        return position_at(env, 20, s);
    });
    auto mx = analysis::estimate_mean(xs);
    EXPECT_NEAR(mx.mean, 10, 4 * mx.std_error);
}

TEST(Walk, DecompositionAndMonotoneI1)
{
    auto env = sample_environment(2, 1, 1e-3, RngStream(7, 0));
    RngStream s(7, 1);
    auto hs = hitting_times(env, {1, 2, 4, 8, 16}, s);
    double prev_i1 = 0;
    for (auto const& d : hs)
    {
        EXPECT_TRUE(d.reached);
        EXPECT_GE(d.I1, prev_i1);
        EXPECT_GE(d.I2, 0.0);
        EXPECT_NEAR(d.I1 + d.I2, d.H, 1e-12 * d.H);
        prev_i1 = d.I1;
    }
    EXPECT_THROW(hitting_times(env, {2, 1}, s), ParameterError);
}

TEST(Walk, PathStartsAtZero)
{
    auto env = sample_environment(3, 1, 1e-3, RngStream(8, 0));
    RngStream s(8, 1);
    auto path = simulate_X(env, 5, 0.5, s);
    ASSERT_EQ(path.size(), 11u);
    EXPECT_EQ(path.values.front(), 0.0);
    RngStream s2(8, 1);
    EXPECT_EQ(position_at(env, 5, s2), path.values.back());
}

TEST(Experiments, HMeanAndSpeed)
{
    auto h = h_mean_check(2, 20, 400, StreamFamily{9, 1}, 1);
    EXPECT_NEAR(h.ratio.mean, 4.0, 0.6);
    EXPECT_LT(h.max_split_error, 1e-10);
    auto v = speed_check(3, 200, 40, StreamFamily{9, 2}, 1);
    EXPECT_NEAR(v.mean.mean, 0.5, 0.1);
}

TEST(Experiments, TailNestingAndGrid)
{
    StreamFamily fam{10, 1};
    EXPECT_THROW(tail_H(1.5, 16, {10, 20}, 10, fam, 1), ParameterError);
    std::vector<double> grid{5, 10, 20};
    auto lo = tail_H(2, 6, grid, 400, fam, 1);
    auto hi = tail_H(2, 12, grid, 400, fam, 1);
    for (std::size_t j = 0; j < grid.size(); ++j)
        EXPECT_LE(hi.curve.points[j].hits, lo.curve.points[j].hits);
    // Below 4/(kappa - 1) the event becomes typical as r grows.
    auto below = tail_H(2, 2, grid, 400, fam, 1);
    EXPECT_GT(below.curve.points.back().p_hat, below.curve.points.front().p_hat);
    EXPECT_GT(below.curve.points.back().p_hat, 0.7);
}

TEST(Experiments, SigmaGrowth)
{
    auto r = sigma_growth_check(2, {25, 50}, 200, StreamFamily{11, 1}, 1);
    EXPECT_NEAR(r.ratio[1].mean, 1.0, 0.05);
    EXPECT_NEAR(r.fit.slope, 1.0, 0.1);
}
