#pragma once

#include <cstddef>

#include "analysis/special_functions.hpp"
#include "jacobi.hpp"
#include "sampling/rng.hpp"

namespace rde::jacobi
{
using sampling::StreamFamily;

struct THalfOptions
{
    double y0_start = 1e-3;
    double dt = 1e-3;
    StepOptions step;
    double horizon = 1e4;
};

struct THalfDraw
{
    double time = 0;
    bool reached = false;
};

/*!
 * First passage of the (2, 2 + 2 kappa) process to 1/2 from y0_start.
 *
 * Crossings inside a step are caught with the Brownian-bridge probability
 * exp(-2 (1/2 - y0)(1/2 - y1) / (4 y0 (1 - y0) h)), frozen coefficient,
 * and then dated at the end of the step; a crossing seen at the step end is
 * dated by linear interpolation.
 */
THalfDraw sample_t_half(double kappa, RngStream& stream,
                        THalfOptions const& opts = {});

/*!
 * E_0 T_{1/2} = (1/2) sum_{n >= 1} Gamma(1 + n + kappa) / Gamma(2 + kappa)
 *               / (2^n n n!),
 * summed to n_terms. For n >= N the term ratio is at most
 * rho = (N + 1 + kappa) / (2 (N + 1)), which bounds the remainder
 * geometrically when rho < 1.
 */
analysis::SeriesValue t_half_moment_series(double kappa, int n_terms);

struct THalfMeanCheck
{
    double mean = 0;
    double std_error = 0;
    double series = 0;
    double rel_error = 0;
    std::size_t shortfalls = 0;
};

THalfMeanCheck t_half_mean_check(double kappa, std::size_t n,
                                 StreamFamily const& fam, unsigned workers,
                                 THalfOptions const& opts = {});

struct LaplaceCheck
{
    double a = 0, b = 0;  //!< ab = theta, a + b = 1 + kappa
    double mc = 0;
    double std_error = 0;
    double closed_form = 0;
    double rel_error = 0;
    std::size_t shortfalls = 0;
};

//! E_0 exp(-2 theta T_{1/2}) = 1 / F(a, b, 1, 1/2). Complex a, b, i.e.
//! theta > (1 + kappa)^2 / 4, is a DomainError.
double t_half_laplace_closed_form(double kappa, double theta);

LaplaceCheck hypergeom_laplace_check(double kappa, double theta, std::size_t n,
                                     StreamFamily const& fam, unsigned workers,
                                     THalfOptions const& opts = {});

}  // namespace rde::jacobi
