#include "sturm_liouville.hpp"

#include <cmath>
#include <sstream>

#include "core/errors.hpp"

namespace rde::analysis
{
namespace
{
enum class Shot
{
    too_steep,    // Phi reaches 0
    too_shallow,  // Phi' turns positive
};

struct ShotParams
{
    double lambda, epsilon, gamma, x_big;
};

constexpr double kRelStep = 1e-3;

// Integrate from eps outward with steps proportional to x. When `record` is
// given, store the trajectory while it is still admissible.
Shot shoot(ShotParams const& p, double s, std::vector<double>* xs = nullptr,
           std::vector<double>* phis = nullptr)
{
    auto accel = [&p](double x, double phi) {
        return 2 * p.lambda * std::pow(x, -1 - p.gamma) * phi;
    };
    double x = p.epsilon;
    double y = 1 + s * p.epsilon;
    double v = s;
    if (y < 0)
        return Shot::too_steep;
    int step = 0;
    while (x < p.x_big)
    {
        double h = std::min(kRelStep * x, p.x_big - x);
        double k1y = v, k1v = accel(x, y);
        double k2y = v + 0.5 * h * k1v, k2v = accel(x + 0.5 * h, y + 0.5 * h * k1y);
        double k3y = v + 0.5 * h * k2v, k3v = accel(x + 0.5 * h, y + 0.5 * h * k2y);
        double k4y = v + h * k3v, k4v = accel(x + h, y + h * k3y);
        y += h / 6 * (k1y + 2 * k2y + 2 * k3y + k4y);
        v += h / 6 * (k1v + 2 * k2v + 2 * k3v + k4v);
        x += h;
        if (y < 0)
            return Shot::too_steep;
        if (v > 0)
            return Shot::too_shallow;
        if (xs && (++step % 16 == 0 || x >= p.x_big))
        {
            xs->push_back(x);
            phis->push_back(y);
        }
    }
    // Past x_big the remaining potential mass is below 1e-10, so Phi' is
    // effectively frozen and its sign decides the fate of the trajectory.
    return v < 0 ? Shot::too_steep : Shot::too_shallow;
}
}  // namespace

SturmLiouvilleSolution solve_sturm_liouville(double lambda, double epsilon,
                                             double gamma)
{
    RDE_REQUIRE(lambda > 0 && epsilon > 0 && gamma > 0, ParameterError,
                "solve_sturm_liouville: lambda, epsilon, gamma must be > 0");

    // Remaining potential mass beyond X is 2 lambda X^(-gamma) / gamma.
    double x_big = std::pow(2 * lambda / (gamma * 1e-10), 1 / gamma);
    ShotParams params{lambda, epsilon, gamma, std::max(x_big, 10 * epsilon)};

    double lo = -1 / epsilon;
    double hi = 0;
    std::ostringstream trace;
    trace << "bracket trace:";
    auto fail = [&](char const* why) {
        throw ConvergenceError(std::string("solve_sturm_liouville: ") + why
                               + "; " + trace.str());
    };
    trace << " [" << lo << ", " << hi << "]";
    if (shoot(params, lo) != Shot::too_steep)
        fail("lower bracket end does not reach zero");
    if (shoot(params, hi) != Shot::too_shallow)
        fail("upper bracket end does not turn upward");

    SturmLiouvilleSolution sol;
    sol.lambda = lambda;
    sol.epsilon = epsilon;
    sol.gamma_exp = gamma;
    constexpr double tol = 1e-10;
    while (hi - lo > tol * std::max(1.0, std::fabs(lo)))
    {
        double mid = 0.5 * (lo + hi);
        if (shoot(params, mid) == Shot::too_steep)
            lo = mid;
        else
            hi = mid;
        ++sol.bisection_steps;
        if (sol.bisection_steps > 200)
        {
            trace << " [" << lo << ", " << hi << "]";
            fail("bisection did not converge");
        }
    }
    // The upper end is the side whose trajectory never reaches zero, which
    // keeps the recorded profile nonnegative.
    sol.phi_prime_at_zero = hi;
    sol.x = {0.0, epsilon};
    sol.phi = {1.0, 1.0 + hi * epsilon};
    shoot(params, hi, &sol.x, &sol.phi);
    return sol;
}

double cylindrical_crosscheck(double lambda, double epsilon, double gamma,
                              double kappa)
{
    RDE_REQUIRE(lambda > 0 && epsilon > 0 && kappa > 0, ParameterError,
                "cylindrical_crosscheck: lambda, epsilon, kappa must be > 0");
    constexpr double match_tol = 1e-12;
    bool decaying_k = std::fabs(gamma - (1 - 1 / kappa)) < match_tol;
    bool decaying_i = std::fabs(gamma - (1 + 1 / kappa)) < match_tol;
    RDE_REQUIRE(decaying_k || decaying_i, DomainError,
                "cylindrical_crosscheck: branch selection failed, gamma must "
                "equal 1 - 1/kappa or 1 + 1/kappa");

    double c = kappa * std::sqrt(8 * lambda);
    double root = std::sqrt(2 * lambda) * std::pow(epsilon, -gamma / 2);
    double g, dg;
    if (decaying_k)
    {
        // g = sqrt(x) K_k(z), z = c x^(1/(2k)); g' = -sqrt(2 lambda)
        // x^(-gamma/2) K_(k-1)(z).
        double z = c * std::pow(epsilon, 1 / (2 * kappa));
        g = std::sqrt(epsilon) * std::cyl_bessel_k(kappa, z);
        dg = -root * std::cyl_bessel_k(kappa - 1, z);
    }
    else
    {
        // g = sqrt(x) I_k(z), z = c x^(-1/(2k)); g' = -sqrt(2 lambda)
        // x^(-gamma/2) I_(k+1)(z).
        double z = c * std::pow(epsilon, -1 / (2 * kappa));
        g = std::sqrt(epsilon) * std::cyl_bessel_i(kappa, z);
        dg = -root * std::cyl_bessel_i(kappa + 1, z);
    }
    RDE_REQUIRE(std::isfinite(g) && std::isfinite(dg) && g > 0, DomainError,
                "cylindrical_crosscheck: Bessel evaluation left the "
                "representable range");
    // Match Phi = 1 + s x on [0, eps] to A g on [eps, inf) in value and slope.
    return dg / (g - epsilon * dg);
}

}  // namespace rde::analysis
