#pragma once

#include <cstddef>
#include <vector>

#include "analysis/tail_fit.hpp"
#include "core/process_path.hpp"
#include "jacobi.hpp"
#include "sampling/rng.hpp"

namespace rde::jacobi
{
using sampling::StreamFamily;

struct UpsilonResult
{
    double r = 0;
    double value = 0;
    Diagnostics diagnostics;
};

//! Integrand Y / (1 - Y)^2 is capped where 1 - Y falls below this.
inline constexpr double kUpsilonSaturation = 1e-10;

//! Upsilon(r) = int_0^r Y / (1 - Y)^2 ds by the trapezoid rule on a
//! recorded path; the last cell is cut at r by linear interpolation.
UpsilonResult upsilon_of(ProcessPath const& path, double r);

struct UpsilonTailOptions
{
    double y0_start = 1e-3;  //!< Stand-in for the entrance point 0
    //! Bulk step. The boundaries are exact in the walker and Upsilon is
    //! resolved near 1 by StepOptions::rel_one, so 1e-2 is enough here.
    double dt = 1e-2;
    StepOptions step;
};

struct UpsilonTail
{
    analysis::TailCurve curve;
    Diagnostics diagnostics;
    std::size_t saturated_paths = 0;
};

/*!
 * P(Upsilon(r) > u r) on an increasing r grid for the (2, 2 + 2 kappa)
 * process started near 0.
 *
 * Every replica runs one path to the last r and reads off all grid points
 * on the way, so the events at different r share paths. Upsilon is
 * accumulated over the adaptive sub-steps, not over a recorded grid, so the
 * short excursions towards 1 that carry the tail are resolved. Fewer than
 * three grid points is rejected; empty cells are reported and the slope is
 * left unfitted when fewer than three cells have hits.
 */
UpsilonTail tail_upsilon(double kappa, double u, std::vector<double> const& r_grid,
                         std::size_t n, StreamFamily const& fam, unsigned workers,
                         UpsilonTailOptions const& opts = {});

//! Per-replica hit indicators behind tail_upsilon, row-major by replica.
std::vector<unsigned char> upsilon_hits(double kappa, double u,
                                        std::vector<double> const& r_grid,
                                        std::size_t n, StreamFamily const& fam,
                                        unsigned workers,
                                        UpsilonTailOptions const& opts = {});

}  // namespace rde::jacobi
