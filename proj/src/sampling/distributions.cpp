#include "distributions.hpp"

#include <array>
#include <cmath>

#include "core/errors.hpp"

namespace rde::sampling
{
namespace
{
//---------------------------------------------------------------------------//
// Ziggurat tables for exp(-x^2/2). Layer i (i >= 1) is the box
// [0, x[i]] x [f(x[i]), f(x[i+1])]; layer 0 is the base strip plus tail.
// Every layer has area kZigArea.
constexpr int kZigLayers = 256;
constexpr double kZigR = 3.6541528853610088;
constexpr double kZigArea = 0.00492867323399;

struct ZigguratTables
{
    std::array<double, kZigLayers + 1> x{};
    std::array<double, kZigLayers + 1> f{};

    ZigguratTables()
    {
        auto pdf = [](double v) { return std::exp(-0.5 * v * v); };
        x[0] = kZigArea / pdf(kZigR);
        x[1] = kZigR;
        for (int i = 1; i < kZigLayers - 1; ++i)
        {
            double next = pdf(x[i]) + kZigArea / x[i];
            x[i + 1] = std::sqrt(-2.0 * std::log(next));
        }
        x[kZigLayers] = 0;
        for (int i = 0; i <= kZigLayers; ++i)
            f[i] = pdf(x[i]);
        f[0] = 0;
    }
};

ZigguratTables const& zig()
{
    static ZigguratTables const tables;
    return tables;
}

double gamma_marsaglia_tsang(RngStream& stream, double shape)
{
    double d = shape - 1.0 / 3.0;
    double c = 1.0 / std::sqrt(9.0 * d);
    for (;;)
    {
        double x, v;
        do
        {
            x = draw_gaussian(stream);
            v = 1.0 + c * x;
        } while (v <= 0);
        v = v * v * v;
        double u = stream.uniform();
        double x2 = x * x;
        if (u < 1.0 - 0.0331 * x2 * x2)
            return d * v;
        if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v)))
            return d * v;
    }
}

std::int64_t poisson_multiplication(RngStream& stream, double mean)
{
    double limit = std::exp(-mean);
    double prod = stream.uniform();
    std::int64_t k = 0;
    while (prod > limit)
    {
        prod *= stream.uniform();
        ++k;
    }
    return k;
}

// Transformed rejection with squeeze (Hormann 1993), valid for mean >= 10.
std::int64_t poisson_ptrs(RngStream& stream, double mean)
{
    double slam = std::sqrt(mean);
    double loglam = std::log(mean);
    double b = 0.931 + 2.53 * slam;
    double a = -0.059 + 0.02483 * b;
    double invalpha = 1.1239 + 1.1328 / (b - 3.4);
    double vr = 0.9277 - 3.6224 / (b - 2);
    for (;;)
    {
        double u = stream.uniform() - 0.5;
        double v = stream.uniform();
        double us = 0.5 - std::fabs(u);
        double k = std::floor((2 * a / us + b) * u + mean + 0.43);
        if (us >= 0.07 && v <= vr)
            return static_cast<std::int64_t>(k);
        if (k < 0 || (us < 0.013 && v > us))
            continue;
        if (std::log(v) + std::log(invalpha) - std::log(a / (us * us) + b)
            <= -mean + k * loglam - std::lgamma(k + 1))
            return static_cast<std::int64_t>(k);
    }
}
}  // namespace

//---------------------------------------------------------------------------//
double draw_gaussian(RngStream& stream)
{
    auto const& t = zig();
    for (;;)
    {
        std::uint64_t bits = stream.next_u64();
        int i = static_cast<int>(bits & 0xff);
        double u = 2.0 * (static_cast<double>(bits >> 11) * 0x1.0p-53) - 1.0;
        double z = u * t.x[i];
        if (std::fabs(z) < t.x[i + 1])
            return z;
        if (i == 0)
        {
            double a, b;
            do
            {
                a = -std::log(stream.uniform()) / kZigR;
                b = -std::log(stream.uniform());
            } while (b + b < a * a);
            return u < 0 ? -(kZigR + a) : kZigR + a;
        }
        double y = t.f[i] + stream.uniform() * (t.f[i + 1] - t.f[i]);
        if (y < std::exp(-0.5 * z * z))
            return z;
    }
}

double draw_exponential(RngStream& stream)
{
    return -std::log(stream.uniform());
}

double draw_gamma(RngStream& stream, double shape, double scale)
{
    RDE_REQUIRE(shape >= 0 && scale > 0, ParameterError,
                "gamma: shape must be >= 0 and scale > 0");
    if (shape == 0)
        return 0;
    if (shape >= 1)
        return scale * gamma_marsaglia_tsang(stream, shape);
    double g = gamma_marsaglia_tsang(stream, shape + 1);
    double log_u = std::log(stream.uniform());
    return scale * std::exp(std::log(g) + log_u / shape);
}

std::int64_t draw_poisson(RngStream& stream, double mean)
{
    RDE_REQUIRE(mean >= 0 && std::isfinite(mean), ParameterError,
                "poisson: mean must be finite and >= 0");
    if (mean == 0)
        return 0;
    if (mean < 10)
        return poisson_multiplication(stream, mean);
    return poisson_ptrs(stream, mean);
}

double draw_noncentral_chisq(RngStream& stream, double d, double noncentrality)
{
    RDE_REQUIRE(d >= 0, ParameterError,
                "noncentral chi-square: degrees of freedom must be >= 0");
    RDE_REQUIRE(noncentrality >= 0, ParameterError,
                "noncentral chi-square: noncentrality must be >= 0");
    auto k = draw_poisson(stream, 0.5 * noncentrality);
    double shape = 0.5 * d + static_cast<double>(k);
    return draw_gamma(stream, shape, 2.0);
}

}  // namespace rde::sampling
