#pragma once

#include <vector>

namespace rde::bessel
{
//! Inverse-gamma density 2^k / Gamma(k) e^(-2/x) x^(-k-1) of S(infinity).
double dufresne_density(double x, double kappa);

//! CDF by adaptive Gauss-Kronrod quadrature of dufresne_density on (0, x].
double dufresne_cdf(double x, double kappa);

//! CDF at every point of an ascending sample, accumulating the quadrature
//! over consecutive gaps so the whole sweep costs one pass.
std::vector<double> dufresne_cdf_sorted(std::vector<double> const& sorted,
                                        double kappa);

//! E S(infinity) = 2/(kappa - 1), finite for kappa > 1.
double dufresne_mean(double kappa);

}  // namespace rde::bessel
