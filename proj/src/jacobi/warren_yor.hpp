#pragma once

#include <cstddef>
#include <vector>

#include "analysis/statistics.hpp"
#include "core/process_path.hpp"
#include "jacobi.hpp"
#include "sampling/rng.hpp"

namespace rde::jacobi
{
using sampling::StreamFamily;

struct WarrenYorOptions
{
    double besq_dt = 1e-3;    //!< Exact BESQ step on the natural clock
    double jacobi_dt = 1e-4;  //!< Largest Euler step for the direct Jacobi
    StepOptions step;
    double horizon = 1e3;     //!< Natural-time cap for reaching s*
    double sum_time = 1.0;    //!< Time of the additivity marginal
    double threshold = 0.02;
};

struct WarrenYorResult
{
    analysis::KsResult ratio_ks;  //!< ratio at inverse clock vs Y(s*)
    analysis::KsResult sum_ks;    //!< R1^2 + R2^2 vs BESQ(4 + 2 kappa)
    std::vector<double> ratio;
    std::vector<double> jacobi;
    std::size_t shortfalls = 0;   //!< Replicas whose clock never reached s*
};

/*!
 * R1^2 ~ BESQ(2) from 0 and R2^2 ~ BESQ(2 + 2 kappa) from 4, stepped
 * exactly; the clock C(t) = int_0^t ds / (R1^2 + R2^2) is accumulated by the
 * trapezoid rule and the ratio R1^2 / (R1^2 + R2^2) is read at C = s* by
 * linear interpolation. The other side is the (2, 2 + 2 kappa) Jacobi
 * process from 0 at time s*, by the Euler walker.
 */
WarrenYorResult warren_yor_check(double kappa, double s_star, std::size_t n,
                                 StreamFamily const& fam, unsigned workers,
                                 WarrenYorOptions const& opts = {});

//! Lambda(r) = int_0^r du / (R1^2 + R2^2) by the trapezoid rule on two
//! squared Bessel paths sharing one time grid.
double lambda_clock(ProcessPath const& r1_sq, ProcessPath const& r2_sq, double r);

/*!
 * One draw of Lambda(r) for R1^2 + R2^2 ~ BESQ(4 + 2 kappa) from 4, by
 * exact transitions with steps rel * X (the sum is enough by additivity).
 */
double sample_lambda_clock(double kappa, double r, sampling::RngStream& stream,
                           double rel = 1e-2);

}  // namespace rde::jacobi
