#pragma once

#include "core/process_path.hpp"
#include "rng.hpp"

namespace rde::sampling
{
//! Standard Brownian motion from 0 on [0, t_max] with step dt.
ProcessPath brownian_path(double t_max, double dt, RngStream& stream);

}  // namespace rde::sampling
