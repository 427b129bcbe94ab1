#pragma once

#include <functional>
#include <vector>

#include "sampling/rng.hpp"

namespace rde::localtime
{
using sampling::RngStream;

//! One exact draw of x -> L^x_{tau(ell)} on a uniform grid of levels.
struct ExactRKField
{
    std::vector<double> levels;
    std::vector<double> values;
};

//! Exact BESQ0 chain from ell with step grid_step on [0, x_max].
ExactRKField sample_rk2_field(double ell, double x_max, double grid_step,
                              RngStream& stream);

//---------------------------------------------------------------------------//
/*!
 * Integral of g(x, L^x) along one exact Ray-Knight field, with steps that
 * adapt to both the level and the field value.
 *
 * Steps are h = min(rel_x * x, rel_z * max(Z, z_floor * ell)) clamped to
 * [h_min * ell, h_max], and shortened so that every segment boundary is a
 * grid point. The z_floor keeps the walk from creeping towards 0 in ever
 * smaller steps: below it the step stops shrinking and absorption, whose
 * probability per step is exp(-Z / 2h), arrives quickly. Each step is an
 * exact BESQ0 transition, so the field is exact in law at the visited
 * levels; the trapezoid rule is unbiased in mean because BESQ0 is a
 * martingale. After absorption the remaining segments contribute their
 * absorbed_integral. At x = 0 only the field-relative step applies.
 */
struct Rk2IntegratorOptions
{
    double rel_x = 1e-2;
    double rel_z = 1e-2;
    double z_floor = 1e-3;  //!< In units of ell
    double h_min = 1e-12;   //!< In units of ell
    double h_max = 1e300;
    double x_start = 0;  //!< First level visited after the jump from 0
};

struct Rk2Segment
{
    double x_end = 0;
    //! Integrand g(x, Z); evaluated on [previous end, x_end].
    std::function<double(double, double)> integrand;
    //! int_a^b g(x, 0) dx, used once the field is absorbed. Leaving it
    //! empty declares g(x, 0) = 0 on this segment.
    std::function<double(double, double)> absorbed_integral;
};

struct Rk2Integral
{
    double value = 0;
    bool absorbed = false;   //!< Field reached 0 before the last segment end
    double final_level = 0;  //!< Where the walk stopped
};

Rk2Integral integrate_rk2_field(double ell, std::vector<Rk2Segment> const& segments,
                                Rk2IntegratorOptions const& opts,
                                RngStream& stream);

//! Level beyond which BESQ0 from ell is alive with probability at most
//! `alive`: 1 - exp(-ell / (2x)) = alive.
double rk2_truncation_level(double ell, double alive);

}  // namespace rde::localtime
