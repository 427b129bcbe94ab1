#include "special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "core/errors.hpp"

namespace rde::analysis
{
SeriesValue hypergeom_2f1(double a, double b, double c, double x)
{
    RDE_REQUIRE(std::fabs(x) < 1, DomainError,
                "hypergeom_2f1: series requires |x| < 1");
    RDE_REQUIRE(!(c <= 0 && c == std::floor(c)), DomainError,
                "hypergeom_2f1: c must not be a non-positive integer");

    constexpr int max_terms = 100000;
    constexpr double eps = std::numeric_limits<double>::epsilon();
    SeriesValue out;
    double term = 1;
    double sum = 1;
    for (int k = 0; k < max_terms; ++k)
    {
        double ratio = (a + k) * (b + k) / ((c + k) * (k + 1.0)) * x;
        term *= ratio;
        sum += term;
        out.terms = k + 2;
        if (term == 0)
        {
            out.value = sum;
            out.remainder_bound = 0;
            return out;
        }
        // Past k ~ |a| + |b| + |c| the term ratio is monotone in k and tends
        // to x, so every later ratio is at most max(next ratio, |x|) and the
        // tail is dominated by a geometric series.
        if (k > std::fabs(a) + std::fabs(b) + std::fabs(c) + 2)
        {
            double next = std::fabs((a + k + 1) * (b + k + 1)
                                    / ((c + k + 1) * (k + 2.0)) * x);
            double rho = std::max(next, std::fabs(x));
            double bound = std::fabs(term) * rho / (1 - rho);
            if (bound <= eps * std::fabs(sum))
            {
                out.value = sum;
                out.remainder_bound = bound;
                return out;
            }
        }
    }
    throw ConvergenceError("hypergeom_2f1: series did not converge");
}

}  // namespace rde::analysis
