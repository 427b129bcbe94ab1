#include "statistics.hpp"

#include <algorithm>
#include <cmath>

#include "core/errors.hpp"

namespace rde::analysis
{
namespace
{
constexpr std::size_t kMinKsSample = 50;

KsResult make_result(double stat, std::size_t n1, std::optional<std::size_t> n2,
                     double threshold)
{
    KsResult r;
    r.statistic = std::clamp(stat, 0.0, 1.0);
    r.n1 = n1;
    r.n2 = n2;
    r.pass_threshold = threshold;
    r.pass = r.statistic < threshold;
    return r;
}
}  // namespace

KsResult ks_two_sample(std::span<double const> a, std::span<double const> b,
                       double threshold)
{
    RDE_REQUIRE(a.size() >= kMinKsSample && b.size() >= kMinKsSample,
                ParameterError, "ks_two_sample: both samples need n >= 50");
    std::vector<double> x(a.begin(), a.end()), y(b.begin(), b.end());
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    double const n1 = static_cast<double>(x.size());
    double const n2 = static_cast<double>(y.size());

    std::size_t i = 0, j = 0;
    double d = 0;
    while (i < x.size() && j < y.size())
    {
        double v = std::min(x[i], y[j]);
        while (i < x.size() && x[i] == v)
            ++i;
        while (j < y.size() && y[j] == v)
            ++j;
        d = std::max(d, std::fabs(double(i) / n1 - double(j) / n2));
    }
    return make_result(d, x.size(), y.size(), threshold);
}

KsResult ks_two_sample(EmpiricalSample const& a, EmpiricalSample const& b,
                       double threshold)
{
    return ks_two_sample(std::span<double const>(a.values),
                         std::span<double const>(b.values), threshold);
}

KsResult ks_one_sample_sorted(
    std::span<double const> a,
    std::function<std::vector<double>(std::vector<double> const&)> const& cdf,
    double threshold)
{
    RDE_REQUIRE(a.size() >= kMinKsSample, ParameterError,
                "ks_one_sample: sample needs n >= 50");
    std::vector<double> x(a.begin(), a.end());
    std::sort(x.begin(), x.end());
    auto f = cdf(x);
    RDE_REQUIRE(f.size() == x.size(), ParameterError,
                "ks_one_sample: CDF callback returned the wrong length");
    double const n = static_cast<double>(x.size());
    double d = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
    {
        d = std::max(d, double(i + 1) / n - f[i]);
        d = std::max(d, f[i] - double(i) / n);
    }
    return make_result(d, x.size(), std::nullopt, threshold);
}

KsResult ks_one_sample(std::span<double const> a,
                       std::function<double(double)> const& cdf,
                       double threshold)
{
    return ks_one_sample_sorted(
        a,
        [&cdf](std::vector<double> const& sorted) {
            std::vector<double> f(sorted.size());
            std::transform(sorted.begin(), sorted.end(), f.begin(), cdf);
            return f;
        },
        threshold);
}

double ks_critical_two_sample(std::size_t n1, std::size_t n2, double alpha)
{
    double c = std::sqrt(-0.5 * std::log(0.5 * alpha));
    double a = static_cast<double>(n1), b = static_cast<double>(n2);
    return c * std::sqrt((a + b) / (a * b));
}

double ks_critical_one_sample(std::size_t n, double alpha)
{
    double c = std::sqrt(-0.5 * std::log(0.5 * alpha));
    return c / std::sqrt(static_cast<double>(n));
}

MomentEstimate estimate_mean(std::span<double const> xs)
{
    RDE_REQUIRE(xs.size() >= 2, ParameterError,
                "estimate_mean: need at least two values");
    double const n = static_cast<double>(xs.size());
    double sum = 0;
    for (double x : xs)
        sum += x;
    double mean = sum / n;
    double ss = 0;
    for (double x : xs)
        ss += (x - mean) * (x - mean);
    MomentEstimate m;
    m.mean = mean;
    m.n = xs.size();
    m.std_error = std::sqrt(ss / (n - 1) / n);
    return m;
}

MomentEstimate estimate_abs_moment(std::span<double const> xs, double p)
{
    std::vector<double> powered(xs.size());
    std::transform(xs.begin(), xs.end(), powered.begin(),
                   [p](double x) { return std::pow(std::fabs(x), p); });
    return estimate_mean(powered);
}

std::complex<double> empirical_cf(std::span<double const> xs, double t)
{
    double re = 0, im = 0;
    for (double x : xs)
    {
        re += std::cos(t * x);
        im += std::sin(t * x);
    }
    double n = static_cast<double>(xs.size());
    return {re / n, im / n};
}

double quantile(std::vector<double> xs, double q)
{
    RDE_REQUIRE(!xs.empty() && q >= 0 && q <= 1, ParameterError,
                "quantile: need a nonempty sample and q in [0, 1]");
    std::sort(xs.begin(), xs.end());
    double pos = q * static_cast<double>(xs.size() - 1);
    auto i = static_cast<std::size_t>(pos);
    if (i + 1 >= xs.size())
        return xs.back();
    double frac = pos - static_cast<double>(i);
    return xs[i] + frac * (xs[i + 1] - xs[i]);
}

double median(std::vector<double> xs)
{
    return quantile(std::move(xs), 0.5);
}

}  // namespace rde::analysis
