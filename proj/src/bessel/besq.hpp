#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "core/process_path.hpp"
#include "sampling/rng.hpp"

namespace rde::bessel
{
using sampling::RngStream;

//! Squared Bessel process dX = 2 sqrt(X) dB + d dt started at `start`.
struct BesqSpec
{
    double dimension_d = 0;
    double start = 0;

    void validate() const;
};

/*!
 * One transition of BESQ(d) over dt.
 *
 * For d >= 0 the step is exact: X' = dt * chi'^2(d, x/dt). For d < 0 it is
 * an Euler-Maruyama step clipped at 0; zero is absorbing whenever d <= 0.
 */
double besq_step(double x, double d, double dt, RngStream& stream);

//! Uniform-grid BESQ path on [0, horizon]. Absorption at 0 (d <= 0) is
//! recorded in absorbed_at and every later value is exactly 0.
ProcessPath simulate_besq(BesqSpec const& spec, double horizon, double dt,
                          RngStream& stream);

struct SInfinityOptions
{
    double dt = 1e-3;        //!< Largest Euler step
    double near_zero = 0.01; //!< Step is near_zero * X when that is smaller
    double dt_min = 1e-8;
    double horizon = 1e3;    //!< Doubled on overrun, up to hard_cap
    double hard_cap = 1e6;
};

/*!
 * Hitting time of 0 for BESQ(2 - 2 kappa) from 4.
 *
 * Euler steps shrink proportionally to X near 0 so the step stays far below
 * 1e-4 where absorption happens; the crossing time is interpolated linearly
 * between the last positive value and the first nonpositive one.
 */
double sample_s_infinity(double kappa, RngStream& stream,
                         SInfinityOptions const& opts = {});

//! Largest value reached by BESQ0 from `start` (exact steps of size dt)
//! before absorption, stopping early once it exceeds `cap`.
double besq0_running_max(double start, double cap, double dt,
                         RngStream& stream);

}  // namespace rde::bessel
