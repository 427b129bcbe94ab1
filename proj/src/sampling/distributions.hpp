#pragma once

#include <cstdint>

#include "rng.hpp"

namespace rde::sampling
{
//! Standard normal draw (256-layer ziggurat).
double draw_gaussian(RngStream& stream);

//! Exponential with unit mean.
double draw_exponential(RngStream& stream);

//! Gamma(shape, scale). Marsaglia-Tsang rejection for shape >= 1, boosted
//! through shape + 1 for shape < 1. Shape 0 returns 0.
double draw_gamma(RngStream& stream, double shape, double scale = 1.0);

//! Poisson(mean): multiplication method below 10, PTRS (Hormann) above.
std::int64_t draw_poisson(RngStream& stream, double mean);

//! Noncentral chi-square with real degrees of freedom d >= 0, drawn as a
//! Poisson(noncentrality / 2) mixture of Gamma(d / 2 + K, scale 2).
double draw_noncentral_chisq(RngStream& stream, double d, double noncentrality);

}  // namespace rde::sampling
