#pragma once

#include "core/grid_function.hpp"
#include "core/process_path.hpp"
#include "sampling/rng.hpp"

namespace rde::jacobi
{
using sampling::RngStream;

//! Jacobi process of dimensions (d1, d2) on [0, 1]:
//! dY = 2 sqrt(Y (1 - Y)) dB + (d1 - (d1 + d2) Y) dt.
struct JacobiSpec
{
    double d1 = 2;
    double d2 = 2;
    double y0 = 0.5;
    double dt = 1e-3;  //!< Largest step and recording interval

    void validate() const;
};

/*!
 * Step control.
 *
 * The walker runs the angle phi with Y = sin^2(phi), for which the noise is
 * additive: dphi = dB + (((d1 - 1)/2) cot phi - ((d2 - 1)/2) tan phi) dt.
 * Near 0 the drift is (d1 - 1)/(2 phi) plus a bounded remainder, so on
 * [0, pi/4] a step is an exact Bessel(d1) radial transition of phi followed
 * by the remainder drift; on [pi/4, pi/2] the same holds for
 * psi = pi/2 - phi with Bessel(d2). The boundaries therefore need no step
 * refinement for the dynamics. Functionals singular at Y = 1 (Upsilon, the
 * U clock) need quadrature resolution there, so the step is also capped at
 * rel_one * psi^2, i.e. a relative move of about sqrt(rel_one) in psi.
 */
struct StepOptions
{
    double rel_one = 1e-2;
    double h_min = 1e-12;
};

//! Single walker; advances in steps of at most dt, never past a limit.
class JacobiWalker
{
  public:
    JacobiWalker(double d1, double d2, double y0, double dt,
                 StepOptions opts = {});

    double y() const { return y_; }
    double t() const { return t_; }

    //! One step, never past t_limit. Returns the step length taken.
    double advance(double t_limit, RngStream& stream);

  private:
    double d1_, d2_, dt_;
    StepOptions opts_;
    double phi_;
    double sin_ = 0, cos_ = 1;
    double y_, t_ = 0;
};

//! Path recorded on the uniform grid spec.dt up to `horizon`.
ProcessPath simulate_jacobi(JacobiSpec const& spec, double horizon,
                            RngStream& stream, StepOptions opts = {});

/*!
 * Scale function S_Y(y) = int_{1/2}^y dx / (x (1 - x)^(kappa + 1)) of the
 * (2, 2 + 2 kappa) process, by Gauss-Kronrod quadrature after a logarithmic
 * substitution towards the nearer endpoint.
 */
double scale_sy(double y, double kappa);

//! U(t) = 4 int_0^t ds / (Y (1 - Y)^(2 kappa + 1)) along a recorded path,
//! trapezoid rule, as a monotone map from path time to U.
GridFunction u_clock(ProcessPath const& path, double kappa);

}  // namespace rde::jacobi
