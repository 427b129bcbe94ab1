#pragma once

#include "sampling/rng.hpp"

namespace rde::bessel
{
struct PerpetuityOptions
{
    double step_fraction = 1e-3;  //!< BESQ step is this fraction of R^2
    double dt_min = 1e-10;
    double dt_max = 1.0;
    double quiet_level = 1e-8;    //!< Integrand threshold for stopping
    double quiet_span = 1.0;      //!< Time the integrand must stay quiet
    double tail_share_tol = 1e-3; //!< Allowed share of the last 10% of time
};

struct PerpetuityDraw
{
    double value = 0;
    double stop_time = 0;
    double tail_share = 0;       //!< Share of the integral from the last 10%
    bool stopped_quiet = false;  //!< False when the horizon cut first
    bool horizon_flag = false;   //!< tail_share exceeded tolerance
};

/*!
 * Y0 = int_0^inf R(s)^(-b) ds for a Bessel process R of dimension d from 2.
 *
 * R^2 is advanced with exact BESQ(d) transitions whose step is proportional
 * to R^2, so the cost grows only logarithmically with the stopping time.
 * Integration stops once R^(-b) has stayed below quiet_level for
 * quiet_span time units, or at the horizon.
 */
PerpetuityDraw sample_perpetuity(double d, double b, double horizon,
                                 sampling::RngStream& stream,
                                 PerpetuityOptions const& opts = {});

//! Law constant: Y0 has the law of (2^(b-2) (b-2)^2)^(-1) times a Dufresne
//! variable of index (d-2)/(b-2).
double perpetuity_scale(double b);
double perpetuity_index(double d, double b);

}  // namespace rde::bessel
