#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace rde::analysis
{
//! A batch of i.i.d. draws and where they came from.
struct EmpiricalSample
{
    std::vector<double> values;
    std::uint64_t seed = 0;
    std::string generator;

    std::size_t n() const { return values.size(); }
};

struct KsResult
{
    double statistic = 0;
    std::size_t n1 = 0;
    std::optional<std::size_t> n2;  //!< Absent for tests against a CDF
    double pass_threshold = 0;
    bool pass = false;
};

//! Two-sample Kolmogorov-Smirnov distance; both samples need n >= 50.
KsResult ks_two_sample(std::span<double const> a, std::span<double const> b,
                       double threshold);
KsResult ks_two_sample(EmpiricalSample const& a, EmpiricalSample const& b,
                       double threshold);

//! One-sample distance sup |F_n - F| against a continuous CDF.
KsResult ks_one_sample(std::span<double const> a,
                       std::function<double(double)> const& cdf,
                       double threshold);

//! As ks_one_sample, for a CDF that is cheapest to evaluate by sweeping a
//! sorted sample left to right (cumulative quadrature). The callback
//! receives the sorted sample and must return the CDF at each point.
KsResult ks_one_sample_sorted(
    std::span<double const> a,
    std::function<std::vector<double>(std::vector<double> const&)> const& cdf,
    double threshold);

//! Asymptotic two-sample critical distance c(alpha) sqrt((n1 + n2)/(n1 n2)),
//! c = sqrt(-log(alpha / 2) / 2).
double ks_critical_two_sample(std::size_t n1, std::size_t n2, double alpha);
double ks_critical_one_sample(std::size_t n, double alpha);

struct MomentEstimate
{
    double mean = 0;
    double std_error = 0;
    std::size_t n = 0;

    //! Normal-approximation confidence interval at z standard errors.
    double lower(double z = 1.96) const { return mean - z * std_error; }
    double upper(double z = 1.96) const { return mean + z * std_error; }
};

//! Sample mean with its standard error, summed in index order.
MomentEstimate estimate_mean(std::span<double const> xs);

//! Mean of |x|^p.
MomentEstimate estimate_abs_moment(std::span<double const> xs, double p);

std::complex<double> empirical_cf(std::span<double const> xs, double t);

double median(std::vector<double> xs);
double quantile(std::vector<double> xs, double q);

}  // namespace rde::analysis
