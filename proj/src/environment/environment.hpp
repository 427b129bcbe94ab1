#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "core/grid_function.hpp"
#include "core/process_path.hpp"
#include "sampling/rng.hpp"

namespace rde::environment
{
//---------------------------------------------------------------------------//
/*!
 * Two-sided drifted Brownian potential W(x) = B(x) - (kappa/2) x on the
 * uniform grid x_n = n h, n in Z, with W(0) = 0.
 *
 * The two half-lines are independent and are drawn lazily in blocks of
 * kBlock increments. Block b of the right half uses stream id
 * derive_stream(id, 2b) under the environment's seed and the left half uses
 * 2b + 1, so the realization does not depend on the order or the amount of
 * extension. A frozen environment (synthetic or loaded from a snapshot)
 * cannot grow; reading past its extent throws DomainError.
 *
 * Lazy growth mutates the object. Share an environment between threads only
 * after extending it far enough, and then only through the const accessors.
 */
class Environment
{
  public:
    static constexpr std::int64_t kBlock = 4096;

    Environment(double kappa, double h, sampling::RngStream const& stream,
                double extent = 0);

    //! Fixed values: w_left[k] = W(-k h), w_right[k] = W(k h), both with
    //! W(0) = 0 in front.
    static Environment frozen(double kappa, double h, std::vector<double> w_left,
                              std::vector<double> w_right);

    double kappa() const { return kappa_; }
    double h() const { return h_; }
    bool is_frozen() const { return frozen_; }

    //! Lowest and highest generated grid index.
    std::int64_t lo() const { return -static_cast<std::int64_t>(left_.size()) + 1; }
    std::int64_t hi() const { return static_cast<std::int64_t>(right_.size()) - 1; }
    double x(std::int64_t n) const { return static_cast<double>(n) * h_; }

    //! Grow until index n is covered.
    void ensure(std::int64_t n);

    //! W at grid index n, growing if necessary.
    double w(std::int64_t n)
    {
        if (n < lo() || n > hi())
            ensure(n);
        return n >= 0 ? right_[static_cast<std::size_t>(n)]
                      : left_[static_cast<std::size_t>(-n)];
    }

    //! W at grid index n; n must already be covered.
    double w_at(std::int64_t n) const;

  private:
    Environment() = default;
    void grow(bool right_side);

    double kappa_ = 0;
    double h_ = 0;
    std::uint64_t seed_ = 0;
    std::uint64_t stream_id_ = 0;
    bool frozen_ = false;
    std::vector<double> right_{0.0};
    std::vector<double> left_{0.0};
};

//! One environment draw covering at least [-extent, extent].
Environment sample_environment(double kappa, double extent, double h,
                               sampling::RngStream const& stream);

//---------------------------------------------------------------------------//
//! S(x) = int_0^x e^W and Sigma(x) = int_0^x e^-W over the generated range.
struct ScalePair
{
    GridFunction S;
    GridFunction Sigma;
    //! Set when a function had to be cut short of the generated range
    //! because it overflowed or stopped increasing in double precision.
    Diagnostics diagnostics;
};

/*!
 * Trapezoid cumulative integrals with compensated summation. Each function
 * is kept on the largest interval around 0 where it is finite and strictly
 * increasing in double precision, so the inverses stay exact at nodes.
 */
ScalePair build_scales(Environment const& env);

/*!
 * S(infinity) = int_0^inf e^W for kappa > 1, extending the environment
 * until the expected remainder e^W(x) * 2 / (kappa - 1) falls below
 * rel_tol times the running sum.
 */
double s_infinity(Environment& env, double rel_tol = 1e-12);

//! log Sigma(r) by a log-domain trapezoid sweep; safe for any r > 0.
double log_sigma(Environment& env, double r);

//---------------------------------------------------------------------------//
/*!
 * Snapshot text format:
 *
 *     # rdelab environment v1
 *     # kappa <kappa>
 *     # h <h>
 *     x W
 *     <x> <W(x)>        one row per grid node, ascending x, %.17g
 *
 * The node x = 0 must be present with W = 0.
 */
void write_snapshot(Environment const& env, std::ostream& os);
Environment read_snapshot(std::istream& is);

}  // namespace rde::environment
