#pragma once

#include <cstddef>
#include <vector>

#include "analysis/statistics.hpp"
#include "analysis/tail_fit.hpp"
#include "walk.hpp"

namespace rde::environment
{
using sampling::StreamFamily;

//! Grid step of the potential and spacing of the embedded walk.
struct EnvOptions
{
    double h = 1e-3;
    WalkOptions walk;
};

// Replica i draws its environment from env_family(fam).at(i) and its walk
// noise from walk_family(fam).at(i).
StreamFamily env_family(StreamFamily const& fam);
StreamFamily walk_family(StreamFamily const& fam);

//! v_kappa = (kappa - 1)^+ / 4.
double speed_constant(double kappa);

struct SpeedResult
{
    std::vector<double> ratios;  //!< X(t)/t per environment
    analysis::MomentEstimate mean;
    double expected = 0;
};

//! One environment and one walk per replica; X(t)/t at a fixed t.
SpeedResult speed_check(double kappa, double t, std::size_t n, StreamFamily const& fam,
                        unsigned workers, EnvOptions const& opts = {});

struct HittingSample
{
    std::vector<HittingDecomposition> draws;
    //! Largest |H - (I1 + I2)| / H over the sample.
    double max_split_error = 0;
};

HittingSample sample_hitting(double kappa, double r, std::size_t n,
                             StreamFamily const& fam, unsigned workers,
                             EnvOptions const& opts = {});

struct HMeanResult
{
    analysis::MomentEstimate ratio;  //!< H(r)/r
    double expected = 0;             //!< 4 / (kappa - 1)
    double max_split_error = 0;
};

HMeanResult h_mean_check(double kappa, double r, std::size_t n, StreamFamily const& fam,
                         unsigned workers, EnvOptions const& opts = {});

struct HTail
{
    analysis::TailCurve curve;
    Diagnostics diagnostics;
};

/*!
 * P(H(r) > u r) on an increasing grid of at least three points, one walk per
 * replica reused across the grid and stopped once its clock passes u r_max.
 * Cells without hits are reported; the slope is fitted only when three
 * cells have hits.
 */
HTail tail_H(double kappa, double u, std::vector<double> const& r_grid, std::size_t n,
             StreamFamily const& fam, unsigned workers, EnvOptions const& opts = {});

struct StableLimitResult
{
    analysis::KsResult ks;            //!< Normalized H at r vs at 2r
    double median_ratio = 0;          //!< median H(r)/r
    double expected_ratio = 0;        //!< 4 / (kappa - 1)
    std::vector<double> normalized_r;
    std::vector<double> normalized_2r;
};

//! (H(r) - 4r/(kappa - 1)) / r^(1/kappa) at r and 2r from independent
//! replica sets, compared by two-sample KS.
StableLimitResult stable_limit_check(double kappa, double r, std::size_t n,
                                     StreamFamily const& fam, unsigned workers,
                                     double threshold, EnvOptions const& opts = {});

struct SigmaGrowthResult
{
    std::vector<double> r_grid;
    std::vector<analysis::MomentEstimate> ratio;  //!< log Sigma(r) / r
    std::vector<double> deviation_freq;  //!< P(|log Sigma(r) - kappa r/2| > r/2)
    double expected = 0;                 //!< kappa / 2
    analysis::SlopeFit fit;              //!< mean log Sigma(r) against r
};

SigmaGrowthResult sigma_growth_check(double kappa, std::vector<double> const& r_grid,
                                     std::size_t n, StreamFamily const& fam,
                                     unsigned workers, double h = 1e-3);

struct DualityResult
{
    analysis::MomentEstimate p_position;  //!< P(X(t) < v t)
    analysis::MomentEstimate p_hitting;   //!< P(H(v t) > t)
    //! P(X(t) < v t, H(v t) <= t): the walk reached v t and fell back. The
    //! second event implies the first on every path, so this is exactly
    //! p_position - p_hitting.
    analysis::MomentEstimate backtrack;
};

//! Both events from the same walk per replica.
DualityResult duality_check(double kappa, double v, double t, std::size_t n,
                            StreamFamily const& fam, unsigned workers,
                            EnvOptions const& opts = {});

struct SInfinityResult
{
    std::vector<double> values;
    analysis::MomentEstimate mean;
    double expected = 0;  //!< 2 / (kappa - 1)
    analysis::KsResult ks;
};

//! S(infinity) per environment against the inverse-gamma law.
SInfinityResult s_infinity_check(double kappa, std::size_t n, StreamFamily const& fam,
                                 unsigned workers, double threshold, double h = 1e-2);

}  // namespace rde::environment
