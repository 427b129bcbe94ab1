#pragma once

#include <cstdint>
#include <vector>

#include "core/process_path.hpp"
#include "environment.hpp"
#include "sampling/rng.hpp"

namespace rde::environment
{
//---------------------------------------------------------------------------//
/*!
 * The diffusion X = S^-1(B(T^-1)) observed on the coarse nodes y_i = i c,
 * c = cell, which must be a whole multiple of the environment step h.
 *
 * While X sits at y_i, the Brownian motion B runs from S(y_i) until it
 * leaves (S(y_{i-1}), S(y_{i+1})). The exit side is exact: right with
 * probability q_i = s_{i-1} / (s_{i-1} + s_i), s_j the S-width of cell j.
 * The clock T gains the Green-function integral of exp(-2 W(S^-1)) over the
 * interval, which in x reads
 *
 *     2 (1 - q_i) int_{cell i-1} (S(x) - S(y_{i-1})) e^{-W(x)} dx
 *   + 2 q_i       int_{cell i}   (S(y_{i+1}) - S(x)) e^{-W(x)} dx.
 *
 * The walk charges this conditional mean rather than a random exit time,
 * so E[H(r) | W] is reproduced exactly and only the sub-cell fluctuation of
 * the clock is dropped. Per-cell integrals are formed relative to W at the
 * cell's left node, where e^W and e^-W cancel, so nothing overflows however
 * deep the potential goes.
 */
class CellChain
{
  public:
    struct Node
    {
        double q = 0.5;           //!< Probability of stepping right
        double hold_left = 0;     //!< Clock share spent in the left cell
        double hold_right = 0;    //!< Clock share spent in the right cell
    };

    CellChain(Environment& env, double cell);

    double cell() const { return cell_; }
    double position(std::int64_t i) const { return cell_ * static_cast<double>(i); }

    Node const& node(std::int64_t i)
    {
        if (i >= 0)
        {
            auto k = static_cast<std::size_t>(i);
            if (k < right_.size())
                return right_[k];
        }
        else
        {
            auto k = static_cast<std::size_t>(-i - 1);
            if (k < left_.size())
                return left_[k];
        }
        return extend(i);
    }

  private:
    struct Cell
    {
        double log_width = 0;  //!< log int_cell e^W
        double a = 0;          //!< int (S(x) - S(left node)) e^-W dx
        double c = 0;          //!< int (S(right node) - S(x)) e^-W dx
    };

    Node const& extend(std::int64_t i);
    Cell make_cell(std::int64_t j);
    Node make_node(std::int64_t i);

    Environment* env_;
    double cell_;
    std::int64_t stride_;
    std::vector<double> e_, f_, s_;  // scratch
    std::vector<Node> right_, left_;
};

//---------------------------------------------------------------------------//
struct WalkOptions
{
    double cell = 0.05;  //!< Coarse node spacing, a multiple of env.h()
};

//! Walker state: node index, clock T and the clock split at x = 0.
struct WalkState
{
    std::int64_t node = 0;
    double clock = 0;
    double occupation_pos = 0;  //!< Clock spent in x >= 0
    double occupation_neg = 0;  //!< Clock spent in x < 0
    std::uint64_t steps = 0;
};

//! One holding period at the current node followed by the jump.
inline void walk_step(CellChain& chain, WalkState& st, sampling::RngStream& stream)
{
    auto const& nd = chain.node(st.node);
    double hold = nd.hold_left + nd.hold_right;
    if (st.node > 0)
        st.occupation_pos += hold;
    else if (st.node < 0)
        st.occupation_neg += hold;
    else
    {
        st.occupation_neg += nd.hold_left;
        st.occupation_pos += nd.hold_right;
    }
    st.clock += hold;
    ++st.steps;
    st.node += stream.uniform() < nd.q ? 1 : -1;
}

/*!
 * X on the uniform time grid 0, record_dt, ..., up to t_max. X(t) is the
 * node occupied at clock time t. The environment grows as the walk explores.
 */
ProcessPath simulate_X(Environment& env, double t_max, double record_dt,
                       sampling::RngStream& stream, WalkOptions const& opts = {});

//! X(t) alone, without recording the path.
double position_at(Environment& env, double t, sampling::RngStream& stream,
                   WalkOptions const& opts = {});

struct HittingDecomposition
{
    double r = 0;
    double H = 0;
    double I1 = 0;  //!< Clock spent in [0, r) before H(r)
    double I2 = 0;  //!< Clock spent in (-inf, 0) before H(r)
    bool reached = true;
};

/*!
 * H(r) = inf{t : X(t) >= r} with its split H = I1 + I2 at x = 0. Each r is
 * rounded up to the node grid. One walk serves the whole increasing grid.
 * If clock_cap is finite the walk stops once the clock passes it and the
 * remaining levels are returned with reached = false and H = clock so far.
 */
std::vector<HittingDecomposition>
hitting_times(Environment& env, std::vector<double> const& r_grid,
              sampling::RngStream& stream, WalkOptions const& opts = {},
              double clock_cap = 0);

HittingDecomposition hitting_time(Environment& env, double r,
                                  sampling::RngStream& stream,
                                  WalkOptions const& opts = {});

}  // namespace rde::environment
