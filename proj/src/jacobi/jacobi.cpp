#include "jacobi.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>

#include "core/errors.hpp"
#include "sampling/distributions.hpp"

namespace rde::jacobi
{
void JacobiSpec::validate() const
{
    RDE_REQUIRE(d1 > 0 && d2 > 0, ParameterError,
                "jacobi: dimensions must be positive");
    RDE_REQUIRE(y0 >= 0 && y0 <= 1, ParameterError,
                "jacobi: start must lie in [0, 1]");
    RDE_REQUIRE(dt > 0, ParameterError, "jacobi: dt must be positive");
}

namespace
{
constexpr double kHalfPi = std::numbers::pi / 2;

// cot(x) - 1/x given sin x and cos x, with its series near 0 to avoid
// cancellation.
double cot_minus_inverse(double x, double sin_x, double cos_x)
{
    if (x < 1e-3)
        return -x / 3 - x * x * x / 45;
    return cos_x / sin_x - 1 / x;
}

// Radial part of a Bessel(delta) process with unit diffusion over time h.
// Integer dimensions up to 8 use delta Gaussians directly.
double bessel_radius_step(double rho, double delta, double h, RngStream& stream)
{
    double sh = std::sqrt(h);
    auto whole = static_cast<int>(delta);
    if (delta == whole && whole >= 1 && whole <= 8)
    {
        double first = rho + sh * sampling::draw_gaussian(stream);
        double sq = first * first;
        for (int k = 1; k < whole; ++k)
        {
            double g = sampling::draw_gaussian(stream);
            sq += h * g * g;
        }
        return std::sqrt(sq);
    }
    return std::sqrt(h * sampling::draw_noncentral_chisq(stream, delta, rho * rho / h));
}
}  // namespace

JacobiWalker::JacobiWalker(double d1, double d2, double y0, double dt,
                           StepOptions opts)
    : d1_(d1), d2_(d2), dt_(dt), opts_(opts),
      phi_(std::asin(std::sqrt(y0))), y_(y0)
{
    sin_ = std::sin(phi_);
    cos_ = std::cos(phi_);
    JacobiSpec{d1, d2, y0, dt}.validate();
    RDE_REQUIRE(opts.rel_one > 0 && opts.h_min > 0, ParameterError,
                "jacobi: step controls must be positive");
}

double JacobiWalker::advance(double t_limit, RngStream& stream)
{
    double psi = kHalfPi - phi_;
    double h = std::min({dt_, std::max(opts_.rel_one * psi * psi, opts_.h_min),
                         t_limit - t_});
    // tan(phi) = sin/cos; the stored sin and cos belong to the current phi.
    if (phi_ <= kHalfPi / 2)
    {
        double rest = 0.5 * (d1_ - 1) * cot_minus_inverse(phi_, sin_, cos_)
                      - 0.5 * (d2_ - 1) * sin_ / cos_;
        phi_ = bessel_radius_step(phi_, d1_, h, stream) + h * rest;
    }
    else
    {
        double rest = 0.5 * (d2_ - 1) * cot_minus_inverse(psi, cos_, sin_)
                      - 0.5 * (d1_ - 1) * cos_ / sin_;
        psi = bessel_radius_step(psi, d2_, h, stream) + h * rest;
        phi_ = kHalfPi - psi;
    }
    // The remainder drift can push past either end by O(h^2); reflect.
    phi_ = std::fabs(phi_);
    if (phi_ > kHalfPi)
        phi_ = std::numbers::pi - phi_;
    sin_ = std::sin(phi_);
    cos_ = std::cos(phi_);
    y_ = sin_ * sin_;
    t_ += h;
    return h;
}

ProcessPath simulate_jacobi(JacobiSpec const& spec, double horizon,
                            RngStream& stream, StepOptions opts)
{
    spec.validate();
    RDE_REQUIRE(horizon >= 0, ParameterError,
                "simulate_jacobi: horizon must be >= 0");
    ProcessPath path;
    path.dt = spec.dt;
    auto steps = static_cast<std::size_t>(std::llround(horizon / spec.dt));
    path.values.reserve(steps + 1);
    path.values.push_back(spec.y0);
    JacobiWalker w(spec.d1, spec.d2, spec.y0, spec.dt, opts);
    for (std::size_t k = 1; k <= steps; ++k)
    {
        double target = spec.dt * static_cast<double>(k);
        while (w.t() < target)
            w.advance(target, stream);
        path.values.push_back(w.y());
    }
    return path;
}

double scale_sy(double y, double kappa)
{
    RDE_REQUIRE(y > 0 && y < 1, DomainError, "scale_sy: y must lie in (0, 1)");
    RDE_REQUIRE(kappa > 0, ParameterError, "scale_sy: kappa must be > 0");
    using boost::math::quadrature::gauss_kronrod;
    if (y >= 0.5)
    {
        // x = 1 - e^s: dx / (x (1-x)^(k+1)) = e^(-k s) / (1 - e^s) ds.
        auto f = [kappa](double s) { return std::exp(-kappa * s) / (-std::expm1(s)); };
        return gauss_kronrod<double, 31>::integrate(f, std::log1p(-y),
                                                    std::log(0.5), 15, 1e-13);
    }
    // x = e^s: dx / (x (1-x)^(k+1)) = ds / (1 - e^s)^(k+1).
    auto f = [kappa](double s) { return std::pow(-std::expm1(s), -kappa - 1); };
    return -gauss_kronrod<double, 31>::integrate(f, std::log(y), std::log(0.5),
                                                 15, 1e-13);
}

GridFunction u_clock(ProcessPath const& path, double kappa)
{
    RDE_REQUIRE(path.size() >= 2, ParameterError,
                "u_clock: path needs at least two points");
    auto rate = [kappa](double y) {
        y = std::clamp(y, 1e-12, 1 - 1e-12);
        return 4 / (y * std::pow(1 - y, 2 * kappa + 1));
    };
    std::vector<double> t(path.size()), u(path.size());
    u[0] = 0;
    t[0] = path.time(0);
    double prev = rate(path.values[0]);
    for (std::size_t i = 1; i < path.size(); ++i)
    {
        double cur = rate(path.values[i]);
        t[i] = path.time(i);
        u[i] = u[i - 1] + 0.5 * path.dt * (prev + cur);
        prev = cur;
    }
    return GridFunction(std::move(t), std::move(u));
}

}  // namespace rde::jacobi
