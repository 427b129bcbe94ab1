#pragma once

namespace rde::analysis
{
//! A truncated series value with an upper bound on the dropped remainder.
struct SeriesValue
{
    double value = 0;
    double remainder_bound = 0;
    int terms = 0;
};

//! Gauss hypergeometric series 2F1(a, b; c; x) for |x| < 1.
//! Throws DomainError for |x| >= 1 and for c a non-positive integer.
SeriesValue hypergeom_2f1(double a, double b, double c, double x);

}  // namespace rde::analysis
