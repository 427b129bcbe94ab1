#pragma once

#include <cstddef>
#include <vector>

namespace rde
{
//---------------------------------------------------------------------------//
/*!
 * Strictly increasing piecewise-linear map y = f(x) given on nodes.
 *
 * Both the node abscissae and the node values must be strictly increasing, so
 * the inverse is again piecewise linear. Evaluating the inverse at a node
 * value returns that node's abscissa bit-for-bit.
 */
class GridFunction
{
  public:
    GridFunction() = default;
    GridFunction(std::vector<double> x, std::vector<double> y);

    double operator()(double x) const;
    double inverse(double y) const;

    double x_min() const { return x_.front(); }
    double x_max() const { return x_.back(); }
    double y_min() const { return y_.front(); }
    double y_max() const { return y_.back(); }

    std::size_t size() const { return x_.size(); }
    std::vector<double> const& nodes() const { return x_; }
    std::vector<double> const& values() const { return y_; }

  private:
    std::vector<double> x_;
    std::vector<double> y_;
};

}  // namespace rde
