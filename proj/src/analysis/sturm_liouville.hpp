#pragma once

#include <vector>

namespace rde::analysis
{
//---------------------------------------------------------------------------//
/*!
 * Decaying solution of Phi'' = 2 lambda x^(-1-gamma) 1{x >= eps} Phi with
 * Phi(0) = 1.
 *
 * On [0, eps] the solution is affine with slope phi_prime_at_zero. The
 * profile covers [0, x_end] where x_end is the last point at which the
 * shooting trajectory was still positive and nonincreasing.
 */
struct SturmLiouvilleSolution
{
    double lambda = 0;
    double epsilon = 0;
    double gamma_exp = 0;
    double phi_prime_at_zero = 0;
    std::vector<double> x;
    std::vector<double> phi;
    int bisection_steps = 0;
};

//! Shooting on Phi'(eps) with bisection to a 1e-10 bracket.
SturmLiouvilleSolution solve_sturm_liouville(double lambda, double epsilon,
                                             double gamma);

/*!
 * Closed-form Phi'(0+) from modified Bessel functions.
 *
 * With nu = 1/|1 - gamma| the equation on [eps, inf) is solved by
 * sqrt(x) Z_nu(nu sqrt(8 lambda) x^((1-gamma)/2)). The decaying branch is
 * K_nu for gamma = 1 - 1/kappa and I_nu for gamma = 1 + 1/kappa (where the
 * argument decreases in x). Any other (gamma, kappa) pairing throws
 * DomainError.
 */
double cylindrical_crosscheck(double lambda, double epsilon, double gamma,
                              double kappa);

}  // namespace rde::analysis
