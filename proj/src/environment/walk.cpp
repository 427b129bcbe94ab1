#include "walk.hpp"

#include <cmath>
#include <limits>

#include "core/errors.hpp"

namespace rde::environment
{
CellChain::CellChain(Environment& env, double cell) : env_(&env), cell_(cell)
{
    RDE_REQUIRE(cell > 0, ParameterError, "CellChain: cell must be > 0");
    double ratio = cell / env.h();
    stride_ = static_cast<std::int64_t>(std::llround(ratio));
    RDE_REQUIRE(stride_ >= 1 && std::fabs(ratio - static_cast<double>(stride_)) < 1e-9 * ratio,
                ParameterError, "CellChain: cell must be a whole multiple of the grid step");
    e_.resize(static_cast<std::size_t>(stride_) + 1);
    f_.resize(e_.size());
    s_.resize(e_.size());
}

CellChain::Cell CellChain::make_cell(std::int64_t j)
{
    double const h = env_->h();
    std::int64_t const n0 = j * stride_;
    double const w0 = env_->w(n0);
    for (std::int64_t m = 0; m <= stride_; ++m)
    {
        double d = env_->w(n0 + m) - w0;
        e_[m] = std::exp(d);
        f_[m] = 1 / e_[m];
    }
    s_[0] = 0;
    for (std::int64_t m = 1; m <= stride_; ++m)
        s_[m] = s_[m - 1] + 0.5 * h * (e_[m - 1] + e_[m]);
    double const width = s_[stride_];
    Cell out;
    out.log_width = w0 + std::log(width);
    for (std::int64_t m = 1; m <= stride_; ++m)
    {
        out.a += 0.5 * h * (s_[m - 1] * f_[m - 1] + s_[m] * f_[m]);
        out.c += 0.5 * h * ((width - s_[m - 1]) * f_[m - 1] + (width - s_[m]) * f_[m]);
    }
    return out;
}

CellChain::Node CellChain::make_node(std::int64_t i)
{
    Cell left = make_cell(i - 1);
    Cell right = make_cell(i);
    Node nd;
    nd.q = 1 / (1 + std::exp(right.log_width - left.log_width));
    nd.hold_left = 2 * (1 - nd.q) * left.a;
    nd.hold_right = 2 * nd.q * right.c;
    return nd;
}

CellChain::Node const& CellChain::extend(std::int64_t i)
{
    if (i >= 0)
    {
        while (static_cast<std::int64_t>(right_.size()) <= i)
            right_.push_back(make_node(static_cast<std::int64_t>(right_.size())));
        return right_[static_cast<std::size_t>(i)];
    }
    while (static_cast<std::int64_t>(left_.size()) <= -i - 1)
        left_.push_back(make_node(-static_cast<std::int64_t>(left_.size()) - 1));
    return left_[static_cast<std::size_t>(-i - 1)];
}

ProcessPath simulate_X(Environment& env, double t_max, double record_dt,
                       sampling::RngStream& stream, WalkOptions const& opts)
{
    RDE_REQUIRE(t_max >= 0 && record_dt > 0, ParameterError,
                "simulate_X: need t_max >= 0 and record_dt > 0");
    CellChain chain(env, opts.cell);
    WalkState st;
    ProcessPath path;
    path.dt = record_dt;
    auto n_rec = static_cast<std::size_t>(std::floor(t_max / record_dt + 1e-9)) + 1;
    path.values.reserve(n_rec);
    for (std::size_t k = 0; k < n_rec; ++k)
    {
        double t = path.time(k);
        // Holding at st.node covers [clock, clock + hold).
        for (;;)
        {
            auto const& nd = chain.node(st.node);
            if (st.clock + nd.hold_left + nd.hold_right > t)
                break;
            walk_step(chain, st, stream);
        }
        path.values.push_back(chain.position(st.node));
    }
    return path;
}

double position_at(Environment& env, double t, sampling::RngStream& stream,
                   WalkOptions const& opts)
{
    RDE_REQUIRE(t >= 0, ParameterError, "position_at: t must be >= 0");
    CellChain chain(env, opts.cell);
    WalkState st;
    for (;;)
    {
        auto const& nd = chain.node(st.node);
        if (st.clock + nd.hold_left + nd.hold_right > t)
            return chain.position(st.node);
        walk_step(chain, st, stream);
    }
}

std::vector<HittingDecomposition>
hitting_times(Environment& env, std::vector<double> const& r_grid,
              sampling::RngStream& stream, WalkOptions const& opts, double clock_cap)
{
    for (std::size_t j = 0; j < r_grid.size(); ++j)
        RDE_REQUIRE(r_grid[j] > 0 && (j == 0 || r_grid[j] > r_grid[j - 1]), ParameterError,
                    "hitting_times: r grid must be positive and increasing");
    double const cap = clock_cap > 0 ? clock_cap : std::numeric_limits<double>::infinity();
    CellChain chain(env, opts.cell);
    WalkState st;
    std::vector<HittingDecomposition> out(r_grid.size());
    for (std::size_t j = 0; j < r_grid.size(); ++j)
    {
        auto target = static_cast<std::int64_t>(std::ceil(r_grid[j] / opts.cell - 1e-9));
        out[j].r = r_grid[j];
        while (st.node < target && st.clock <= cap)
            walk_step(chain, st, stream);
        out[j].H = st.clock;
        out[j].I1 = st.occupation_pos;
        out[j].I2 = st.occupation_neg;
        out[j].reached = st.node >= target;
    }
    return out;
}

HittingDecomposition hitting_time(Environment& env, double r, sampling::RngStream& stream,
                                  WalkOptions const& opts)
{
    return hitting_times(env, {r}, stream, opts).front();
}

}  // namespace rde::environment
