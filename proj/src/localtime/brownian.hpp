#pragma once

#include <string>
#include <vector>

#include "core/process_path.hpp"
#include "sampling/rng.hpp"

namespace rde::localtime
{
using sampling::RngStream;

enum class StopRule
{
    sigma,  //!< first hitting time of a level
    tau,    //!< inverse local time at 0
};

//! Estimated local time field L^x on a uniform grid of levels.
struct LocalTimeField
{
    std::vector<double> levels;
    std::vector<double> values;
    double bandwidth = 0;
    StopRule stop_rule = StopRule::sigma;
    Diagnostics diagnostics;

    double level_step() const
    {
        return levels.size() > 1 ? levels[1] - levels[0] : 0.0;
    }
    //! Trapezoid integral of the field over its levels.
    double integral() const;
};

struct SigmaPath
{
    ProcessPath path;
    double sigma_time = 0;
    bool reached = false;  //!< False when the horizon cap stopped the walk
    Diagnostics diagnostics;
};

/*!
 * Brownian path from 0 until its first passage above r.
 *
 * Between grid points a crossing is detected with the Brownian-bridge
 * probability exp(-2 (r - B0)(r - B1) / dt), and sigma is placed at the
 * grid point closing the crossing step. Stops with a diagnostic at
 * `horizon`.
 */
SigmaPath simulate_to_sigma(double r, double dt, double horizon,
                            RngStream& stream);

//! Default bandwidth dt^0.4.
double default_bandwidth(double dt);

/*!
 * Local time estimate L^x = dt #{k : |B_k - x| < h} / (2h) on levels spaced
 * by h / 4, covering the range of the path. The final path point carries no
 * time, so the occupation integral equals the elapsed time up to the
 * boundary counting of the level grid.
 */
LocalTimeField local_time_profile(ProcessPath const& path, double bandwidth,
                                  StopRule rule = StopRule::sigma);

//---------------------------------------------------------------------------//
struct Rk1Options
{
    double dt = 1e-4;
    double bandwidth = 0;      //!< 0 selects default_bandwidth(dt)
    double skip_below = -0.5;  //!< Excursions below this level are skipped
    double horizon = 1e12;     //!< Cap on Brownian time
};

struct Rk1Sample
{
    std::vector<double> levels;
    std::vector<double> local_times;
    double sigma_time = 0;
    bool reached = false;
};

/*!
 * Local times at a few fixed levels (all above skip_below + bandwidth) at
 * sigma(r), without storing the path.
 *
 * Whenever the walk falls below skip_below it is returned to that level
 * after a Levy-distributed time delta^2 / Z^2, delta being the depth of the
 * overshoot. That is the exact law of the first return time, and no level
 * above skip_below + bandwidth collects occupation during the skipped
 * excursion, so the estimates keep the law of the unskipped estimator.
 */
Rk1Sample sample_rk1_levels(double r, std::vector<double> const& levels,
                            Rk1Options const& opts, RngStream& stream);

}  // namespace rde::localtime
