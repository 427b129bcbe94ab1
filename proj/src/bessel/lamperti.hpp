#pragma once

#include "core/process_path.hpp"

namespace rde::bessel
{
struct LampertiResult
{
    //! R against the clock A(t) = int_0^t exp(B(y) + zeta y / 2) dy.
    ClockedPath r_on_clock;
    //! max_k |exp(B + zeta t/2) - R(A(t_k))^2 / 4| over the grid.
    double max_residual = 0;
};

/*!
 * Lamperti construction of a Bessel process of dimension 2 + 2 zeta from 2.
 *
 * The clock A is accumulated by the trapezoid rule on the grid of the input
 * Brownian path, and R(A(t_k)) = 2 exp((B(t_k) + zeta t_k / 2) / 2) exactly
 * at every node.
 */
LampertiResult lamperti_transform(ProcessPath const& bm_path, double zeta);

}  // namespace rde::bessel
