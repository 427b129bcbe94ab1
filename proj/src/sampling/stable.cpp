#include "stable.hpp"

#include <cmath>
#include <numbers>

#include "core/errors.hpp"
#include "distributions.hpp"

namespace rde::sampling
{
StableLawSpec::StableLawSpec(double index_p) : p_(index_p)
{
    RDE_REQUIRE(index_p > 0 && index_p <= 1, ParameterError,
                "stable law: index p must lie in (0, 1]");
}

// Chambers-Mallows-Stuck with the Weron (1996) correction. With
// V ~ U(-pi/2, pi/2) and W ~ Exp(1) independent, for alpha != 1,
//   B = arctan(beta tan(pi alpha/2)) / alpha,
//   S = (1 + beta^2 tan^2(pi alpha/2))^(1/(2 alpha)),
//   X = S sin(alpha (V + B)) / cos(V)^(1/alpha)
//         * (cos(V - alpha (V + B)) / W)^((1 - alpha)/alpha)
// is S_alpha(1, beta, 0). At beta = 1 and alpha < 1 this gives B = pi/2 and
// S = cos(pi alpha/2)^(-1/alpha), matching the CF in the header exactly.
double draw_stable(StableLawSpec const& spec, RngStream& stream)
{
    double const a = spec.index_p();
    RDE_REQUIRE(a < 1, ParameterError,
                "draw_stable: index p must lie in (0, 1); use "
                "draw_cauchy_asym for p = 1");
    constexpr double half_pi = 0.5 * std::numbers::pi;
    double const b_shift = half_pi;
    double const s_scale = std::pow(std::cos(half_pi * a), -1.0 / a);

    double v = std::numbers::pi * (stream.uniform() - 0.5);
    double w = draw_exponential(stream);
    double shifted = a * (v + b_shift);
    double head = s_scale * std::sin(shifted) / std::pow(std::cos(v), 1.0 / a);
    double tail = std::pow(std::cos(v - shifted) / w, (1.0 - a) / a);
    return head * tail;
}

// Weron's alpha = 1 branch with beta = 1:
//   X = (2/pi) [ (pi/2 + V) tan V - log( (pi/2) W cos V / (pi/2 + V) ) ],
// distributed as S_1(1, 1, 0).
double draw_cauchy_asym(RngStream& stream)
{
    constexpr double half_pi = 0.5 * std::numbers::pi;
    double v = std::numbers::pi * (stream.uniform() - 0.5);
    double w = draw_exponential(stream);
    double lead = half_pi + v;
    return (lead * std::tan(v) - std::log(half_pi * w * std::cos(v) / lead))
           / half_pi;
}

}  // namespace rde::sampling
