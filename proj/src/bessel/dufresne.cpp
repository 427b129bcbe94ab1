#include "dufresne.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "core/errors.hpp"

namespace rde::bessel
{
namespace
{
// Gaps between consecutive sorted draws are short and the density is smooth,
// so a shallow recursion is enough there; the density is vanishingly flat
// near 0, which would stall a deep relative-tolerance recursion.
double integrate(double a, double b, double kappa, unsigned max_depth = 4)
{
    if (!(b > a))
        return 0;
    auto f = [kappa](double x) { return x > 0 ? dufresne_density(x, kappa) : 0.0; };
    return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
        f, a, b, max_depth, 1e-12);
}
}  // namespace

double dufresne_density(double x, double kappa)
{
    RDE_REQUIRE(kappa > 0, ParameterError, "dufresne_density: kappa > 0");
    RDE_REQUIRE(x > 0, DomainError, "dufresne_density: x must be > 0");
    double log_f = kappa * std::log(2.0) - std::lgamma(kappa) - 2 / x
                   - (kappa + 1) * std::log(x);
    return std::exp(log_f);
}

double dufresne_cdf(double x, double kappa)
{
    RDE_REQUIRE(kappa > 0, ParameterError, "dufresne_cdf: kappa > 0");
    if (x <= 0)
        return 0;
    // Substituting u = 1/x turns int_0^x f into
    // int_(1/x)^inf 2^k / Gamma(k) e^(-2u) u^(k-1) du, whose mass is no
    // longer squeezed against the origin.
    double log_c = kappa * std::log(2.0) - std::lgamma(kappa);
    auto g = [kappa, log_c](double u) {
        return u > 0 ? std::exp(log_c - 2 * u + (kappa - 1) * std::log(u)) : 0.0;
    };
    boost::math::quadrature::exp_sinh<double> integrator;
    double lower = std::isfinite(x) ? 1 / x : 0.0;
    return std::clamp(integrator.integrate(g, lower,
                                           std::numeric_limits<double>::infinity(),
                                           1e-13),
                      0.0, 1.0);
}

std::vector<double> dufresne_cdf_sorted(std::vector<double> const& sorted,
                                        double kappa)
{
    std::vector<double> out(sorted.size());
    double acc = 0;
    double prev = 0;
    for (std::size_t i = 0; i < sorted.size(); ++i)
    {
        double x = sorted[i];
        RDE_REQUIRE(i == 0 || x >= sorted[i - 1], ParameterError,
                    "dufresne_cdf_sorted: sample must be ascending");
        if (i == 0)
        {
            acc = dufresne_cdf(x, kappa);
            prev = x;
        }
        else if (x > prev)
        {
            acc += integrate(prev, x, kappa);
            prev = x;
        }
        out[i] = std::min(1.0, acc);
    }
    return out;
}

double dufresne_mean(double kappa)
{
    RDE_REQUIRE(kappa > 1, DomainError, "dufresne_mean: needs kappa > 1");
    return 2 / (kappa - 1);
}

}  // namespace rde::bessel
