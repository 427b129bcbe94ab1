#pragma once

#include "rng.hpp"

namespace rde::sampling
{
//---------------------------------------------------------------------------//
/*!
 * Completely asymmetric stable law of index p in (0, 1].
 *
 * For p < 1 the target characteristic function is
 *   E exp(itX) = exp(-|t|^p (1 - i sgn(t) tan(pi p / 2))),
 * which is S_p(sigma = 1, beta = 1, mu = 0) in the Samorodnitsky-Taqqu
 * parametrization. For p = 1 the target is
 *   E exp(itX) = exp(-|t| - i t (2/pi) log|t|),
 * which is S_1(1, 1, 0) in the same parametrization.
 */
class StableLawSpec
{
  public:
    explicit StableLawSpec(double index_p);

    double index_p() const { return p_; }
    bool is_cauchy() const { return p_ == 1.0; }

  private:
    double p_;
};

//! Draw from the p < 1 law; throws ParameterError for the Cauchy spec.
double draw_stable(StableLawSpec const& spec, RngStream& stream);

//! Draw from the index-1 completely asymmetric Cauchy law.
double draw_cauchy_asym(RngStream& stream);

}  // namespace rde::sampling
