#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <gtest/gtest.h>

#include "analysis/special_functions.hpp"
#include "analysis/statistics.hpp"
#include "analysis/sturm_liouville.hpp"
#include "analysis/tail_fit.hpp"
#include "core/errors.hpp"
#include "core/grid_function.hpp"
#include "sampling/distributions.hpp"

namespace rde::analysis
{
namespace test
{
using sampling::RngStream;

std::vector<double> normals(std::uint64_t seed, std::size_t n, double shift = 0)
{
    RngStream s(seed, 0);
    std::vector<double> v(n);
    for (auto& x : v)
        x = sampling::draw_gaussian(s) + shift;
    return v;
}

TEST(Ks, IdenticalSamplesGiveZero)
{
    auto a = normals(1, 1000);
    auto r = ks_two_sample(a, a, 0.05);
    EXPECT_EQ(0.0, r.statistic);
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(1000u, *r.n2);
}

TEST(Ks, NullDistributionAtLargeN)
{
    auto r = ks_two_sample(normals(2, 100000), normals(3, 100000), 0.012);
    EXPECT_LT(r.statistic, 0.012);
    EXPECT_TRUE(r.pass);
}

TEST(Ks, DetectsShift)
{
    // sup |Phi(x) - Phi(x - 1)| = 2 Phi(1/2) - 1 = 0.3829.
    auto r = ks_two_sample(normals(4, 10000), normals(5, 10000, 1.0), 0.05);
    EXPECT_GT(r.statistic, 0.3);
    EXPECT_FALSE(r.pass);
}

TEST(Ks, InvariantUnderMonotoneTransform)
{
    auto a = normals(6, 2000), b = normals(7, 3000, 0.1);
    auto before = ks_two_sample(a, b, 1).statistic;
    auto tr = [](double x) { return std::exp(x) + x * x * x; };
    std::transform(a.begin(), a.end(), a.begin(), tr);
    std::transform(b.begin(), b.end(), b.begin(), tr);
    EXPECT_EQ(before, ks_two_sample(a, b, 1).statistic);
}

TEST(Ks, HandlesTies)
{
    std::vector<double> a(100, 1.0), b(100, 1.0);
    b[0] = 2.0;
    EXPECT_NEAR(0.01, ks_two_sample(a, b, 1).statistic, 1e-15);
}

TEST(Ks, RejectsTinySamples)
{
    std::vector<double> a(10, 0.0), b(100, 0.0);
    EXPECT_THROW(ks_two_sample(a, b, 0.1), ParameterError);
}

TEST(Ks, OneSampleAgainstNormalCdf)
{
    auto a = normals(8, 50000);
    auto cdf = [](double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); };
    auto r = ks_one_sample(a, cdf, ks_critical_one_sample(a.size(), 0.001));
    EXPECT_TRUE(r.pass) << r.statistic;
    EXPECT_FALSE(r.n2.has_value());
}

TEST(Ks, CriticalValues)
{
    // c(0.05) = 1.358
    EXPECT_NEAR(1.3581, ks_critical_one_sample(1, 0.05), 1e-4);
    EXPECT_NEAR(1.3581 * std::sqrt(2.0 / 100), ks_critical_two_sample(100, 100, 0.05), 1e-4);
}

TEST(Moments, MeanAndStderr)
{
    std::vector<double> v{1, 2, 3, 4};
    auto m = estimate_mean(v);
    EXPECT_DOUBLE_EQ(2.5, m.mean);
    EXPECT_NEAR(std::sqrt(5.0 / 3.0 / 4.0), m.std_error, 1e-15);
    EXPECT_LT(m.lower(), m.mean);
    EXPECT_DOUBLE_EQ(2.5, median(v));
}

//---------------------------------------------------------------------------//
TEST(SlopeFit, ExactPowerLaw)
{
    std::vector<TailPoint> pts;
    for (double r : {10.0, 100.0, 1000.0})
        pts.push_back({r, 1000000, 0, 1 / r, 0.0});
    auto fit = fit_loglog_slope(pts);
    EXPECT_NEAR(-1.0, fit.slope, 1e-12);
    EXPECT_GT(fit.slope_stderr, 0);
}

TEST(SlopeFit, NoisyHalfPowerLaw)
{
    RngStream s(9, 0);
    std::vector<TailPoint> pts;
    for (double r : {10.0, 20.0, 40.0, 80.0, 160.0, 320.0})
    {
        double p = 0.3 * std::pow(r, -0.5)
                   * (1 + 0.05 * sampling::draw_gaussian(s));
        pts.push_back({r, 10000, 0, p, 0.05 * p});
    }
    auto fit = fit_loglog_slope(pts);
    EXPECT_NEAR(-0.5, fit.slope, 0.1);
}

TEST(SlopeFit, ConstantProbability)
{
    std::vector<TailPoint> pts;
    for (double r : {1.0, 2.0, 3.0, 4.0})
        pts.push_back(make_tail_point(r, 1000, 250));
    EXPECT_NEAR(0.0, fit_loglog_slope(pts).slope, 1e-12);
}

TEST(SlopeFit, ScalingChangesInterceptOnly)
{
    std::vector<TailPoint> pts{make_tail_point(10, 10000, 900),
                               make_tail_point(20, 10000, 610),
                               make_tail_point(40, 10000, 470)};
    auto base = fit_loglog_slope(pts);
    for (auto& p : pts)
    {
        p.p_hat *= 0.37;
        p.std_error *= 0.37;
    }
    auto scaled = fit_loglog_slope(pts);
    EXPECT_NEAR(base.slope, scaled.slope, 1e-12);
    EXPECT_NEAR(base.intercept + std::log(0.37), scaled.intercept, 1e-12);
}

TEST(SlopeFit, RejectsDegenerateGrids)
{
    std::vector<TailPoint> two{make_tail_point(10, 100, 5),
                               make_tail_point(20, 100, 3)};
    EXPECT_THROW(fit_loglog_slope(two), ParameterError);
    std::vector<TailPoint> zeros{make_tail_point(10, 100, 5),
                                 make_tail_point(20, 100, 3),
                                 make_tail_point(40, 100, 0)};
    EXPECT_THROW(fit_loglog_slope(zeros), ParameterError);
}

//---------------------------------------------------------------------------//
TEST(Hypergeometric, Basics)
{
    EXPECT_EQ(1.0, hypergeom_2f1(1.3, 2.1, 0.7, 0.0).value);
    EXPECT_NEAR(2.0, hypergeom_2f1(1, 1, 1, 0.5).value, 1e-15);
    // 2F1(1,1;2;x) = -log(1-x)/x
    EXPECT_NEAR(-std::log(0.5) / 0.5, hypergeom_2f1(1, 1, 2, 0.5).value, 1e-15);
    EXPECT_THROW(hypergeom_2f1(1, 1, 1, 1.0), DomainError);
    EXPECT_THROW(hypergeom_2f1(1, 1, -2, 0.5), DomainError);
}

TEST(Hypergeometric, RemainderBoundIsHonest)
{
    auto v = hypergeom_2f1(2.5, 0.5, 1, 0.5);
    // 2F1(a, b; b; x) = (1-x)^-a gives an exact reference for a cousin.
    auto w = hypergeom_2f1(2.5, 0.5, 0.5, 0.5);
    EXPECT_NEAR(std::pow(0.5, -2.5), w.value, 1e-13);
    EXPECT_GE(v.remainder_bound, 0);
    EXPECT_LT(v.remainder_bound, 1e-14);
}

TEST(Hypergeometric, LaplaceDerivativeMatchesHalfTimeMoment)
{
    double kappa = 2;
    auto g = [kappa](double theta) {
        double s = 1 + kappa;
        double disc = std::sqrt(s * s - 4 * theta);
        return hypergeom_2f1(0.5 * (s + disc), 0.5 * (s - disc), 1, 0.5).value;
    };
    double h = 1e-5;
    double deriv = (g(h) - g(-h)) / (2 * h);
    EXPECT_NEAR((5 + 2 * std::log(2.0)) / 6, deriv, 1e-6);
}

TEST(LogGamma, MatchesHighPrecision)
{
    using boost::multiprecision::cpp_bin_float_50;
    for (double x : {0.1, 0.5, 1.0, 1.5, 2.0, 2.5, 3.7, 7.25, 12.0, 33.3, 101.5})
    {
        double ref = static_cast<double>(boost::multiprecision::lgamma(cpp_bin_float_50(x)));
        EXPECT_NEAR(ref, std::lgamma(x), 1e-10 * std::max(1.0, std::fabs(ref))) << x;
        double gref = static_cast<double>(boost::multiprecision::tgamma(cpp_bin_float_50(x)));
        EXPECT_NEAR(1.0, std::tgamma(x) / gref, 1e-10) << x;
    }
}

//---------------------------------------------------------------------------//
TEST(SturmLiouville, MatchesCylindricalClosedForm)
{
    auto sol = solve_sturm_liouville(0.1, 0.1, 0.5);
    double closed = cylindrical_crosscheck(0.1, 0.1, 0.5, 2.0);
    EXPECT_LT(sol.phi_prime_at_zero, 0);
    EXPECT_LT(closed, 0);
    EXPECT_NEAR(1.0, sol.phi_prime_at_zero / closed, 1e-5);
}

TEST(SturmLiouville, IBranchAboveOne)
{
    // gamma = 1 + 1/kappa selects the I-branch.
    for (double kappa : {1.5, 2.0, 3.0})
    {
        double gamma = 1 + 1 / kappa;
        auto sol = solve_sturm_liouville(0.3, 0.2, gamma);
        double closed = cylindrical_crosscheck(0.3, 0.2, gamma, kappa);
        EXPECT_NEAR(1.0, sol.phi_prime_at_zero / closed, 1e-5) << kappa;
    }
}

TEST(SturmLiouville, ProfileShape)
{
    auto sol = solve_sturm_liouville(0.1, 0.1, 0.5);
    ASSERT_GT(sol.x.size(), 10u);
    EXPECT_EQ(1.0, sol.phi.front());
    for (std::size_t i = 1; i < sol.x.size(); ++i)
    {
        EXPECT_LE(sol.phi[i] - sol.phi[i - 1], 1e-12);
        EXPECT_GE(sol.phi[i], 0);
    }
    for (std::size_t i = 1; i + 1 < sol.x.size(); ++i)
    {
        // Second divided difference on the nonuniform grid.
        double s1 = (sol.phi[i] - sol.phi[i - 1]) / (sol.x[i] - sol.x[i - 1]);
        double s2 = (sol.phi[i + 1] - sol.phi[i]) / (sol.x[i + 1] - sol.x[i]);
        EXPECT_GE(s2 - s1, -1e-8);
    }
}

TEST(SturmLiouville, SmallLambdaLimit)
{
    auto sol = solve_sturm_liouville(1e-9, 0.1, 0.5);
    EXPECT_LE(sol.phi_prime_at_zero, 0);
    EXPECT_GT(sol.phi_prime_at_zero, -1e-3);
    double closed = cylindrical_crosscheck(1e-9, 0.1, 0.5, 2.0);
    EXPECT_LE(closed, 0);
    EXPECT_GT(closed, -1e-3);
}

TEST(SturmLiouville, BranchMismatchRejected)
{
    EXPECT_THROW(cylindrical_crosscheck(0.1, 0.1, 0.5, 3.0), DomainError);
    EXPECT_THROW(solve_sturm_liouville(-1, 0.1, 0.5), ParameterError);
}

//---------------------------------------------------------------------------//
TEST(GridFunction, RoundTripOnNodes)
{
    std::vector<double> x{-1, 0, 0.3, 2}, y{-5, 0, 1e-9, 7};
    GridFunction f(x, y);
    for (std::size_t i = 0; i < x.size(); ++i)
    {
        EXPECT_EQ(y[i], f(x[i]));
        EXPECT_EQ(x[i], f.inverse(y[i]));
    }
    EXPECT_DOUBLE_EQ(1e-9 + 0.5 * (7 - 1e-9), f(1.15));
    EXPECT_DOUBLE_EQ(1.15, f.inverse(f(1.15)));
    EXPECT_THROW(f(3), DomainError);
    EXPECT_THROW(GridFunction({0, 1}, {1, 1}), ParameterError);
}

}  // namespace test
}  // namespace rde::analysis
