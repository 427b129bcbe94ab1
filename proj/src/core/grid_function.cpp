#include "grid_function.hpp"

#include <algorithm>

#include "errors.hpp"

namespace rde
{
namespace
{
bool strictly_increasing(std::vector<double> const& v)
{
    return std::adjacent_find(v.begin(), v.end(), std::greater_equal<>())
           == v.end();
}

// Linear interpolation of (xs -> ys) at q, with q inside [xs.front, xs.back].
double interpolate(std::vector<double> const& xs, std::vector<double> const& ys,
                   double q)
{
    auto it = std::lower_bound(xs.begin(), xs.end(), q);
    auto i = static_cast<std::size_t>(it - xs.begin());
    if (*it == q)
        return ys[i];
    double frac = (q - xs[i - 1]) / (xs[i] - xs[i - 1]);
    return ys[i - 1] + frac * (ys[i] - ys[i - 1]);
}
}  // namespace

GridFunction::GridFunction(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y))
{
    RDE_REQUIRE(x_.size() == y_.size() && x_.size() >= 2, ParameterError,
                "GridFunction: need at least two nodes with matching values");
    RDE_REQUIRE(strictly_increasing(x_), ParameterError,
                "GridFunction: nodes must be strictly increasing");
    RDE_REQUIRE(strictly_increasing(y_), ParameterError,
                "GridFunction: values must be strictly increasing");
}

double GridFunction::operator()(double x) const
{
    RDE_REQUIRE(x >= x_.front() && x <= x_.back(), DomainError,
                "GridFunction: argument outside the tabulated range");
    return interpolate(x_, y_, x);
}

double GridFunction::inverse(double y) const
{
    RDE_REQUIRE(y >= y_.front() && y <= y_.back(), DomainError,
                "GridFunction: value outside the tabulated range");
    return interpolate(y_, x_, y);
}

}  // namespace rde
