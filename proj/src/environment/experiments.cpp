#include "experiments.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "bessel/dufresne.hpp"
#include "core/errors.hpp"
#include "sampling/replicas.hpp"

namespace rde::environment
{
StreamFamily env_family(StreamFamily const& fam)
{
    return {fam.seed, sampling::derive_stream(fam.domain, sampling::hash_name("environment"))};
}

StreamFamily walk_family(StreamFamily const& fam)
{
    return {fam.seed, sampling::derive_stream(fam.domain, sampling::hash_name("walk"))};
}

double speed_constant(double kappa)
{
    return std::max(kappa - 1, 0.0) / 4;
}

namespace
{
Environment replica_env(double kappa, StreamFamily const& fam, std::size_t i, double h)
{
    return Environment(kappa, h, env_family(fam).at(i));
}

std::vector<double> indicator(std::vector<bool> const& b)
{
    std::vector<double> out(b.size());
    for (std::size_t i = 0; i < b.size(); ++i)
        out[i] = b[i] ? 1.0 : 0.0;
    return out;
}
}  // namespace

SpeedResult speed_check(double kappa, double t, std::size_t n, StreamFamily const& fam,
                        unsigned workers, EnvOptions const& opts)
{
    RDE_REQUIRE(t > 0 && n >= 2, ParameterError, "speed_check: need t > 0 and n >= 2");
    SpeedResult out;
    out.ratios = parallel_map<double>(n, workers, [&](std::size_t i) {
        auto env = replica_env(kappa, fam, i, opts.h);
        auto s = walk_family(fam).at(i);
        return position_at(env, t, s, opts.walk) / t;
    });
    out.mean = analysis::estimate_mean(out.ratios);
    out.expected = speed_constant(kappa);
    return out;
}

HittingSample sample_hitting(double kappa, double r, std::size_t n,
                             StreamFamily const& fam, unsigned workers,
                             EnvOptions const& opts)
{
    RDE_REQUIRE(kappa > 1, DomainError, "sample_hitting: H(r) is finite only for kappa > 1");
    HittingSample out;
    out.draws = parallel_map<HittingDecomposition>(n, workers, [&](std::size_t i) {
        auto env = replica_env(kappa, fam, i, opts.h);
        auto s = walk_family(fam).at(i);
        return hitting_time(env, r, s, opts.walk);
    });
    for (auto const& d : out.draws)
        out.max_split_error =
            std::max(out.max_split_error, std::fabs(d.H - d.I1 - d.I2) / d.H);
    return out;
}

HMeanResult h_mean_check(double kappa, double r, std::size_t n, StreamFamily const& fam,
                         unsigned workers, EnvOptions const& opts)
{
    auto sample = sample_hitting(kappa, r, n, fam, workers, opts);
    std::vector<double> ratio;
    for (auto const& d : sample.draws)
        ratio.push_back(d.H / r);
    HMeanResult out;
    out.ratio = analysis::estimate_mean(ratio);
    out.expected = 4 / (kappa - 1);
    out.max_split_error = sample.max_split_error;
    return out;
}

HTail tail_H(double kappa, double u, std::vector<double> const& r_grid, std::size_t n,
             StreamFamily const& fam, unsigned workers, EnvOptions const& opts)
{
    RDE_REQUIRE(kappa > 1, DomainError, "tail_H: needs kappa > 1");
    RDE_REQUIRE(r_grid.size() >= 3, ParameterError,
                "tail_H: the slope fit needs an r grid of at least 3 points");
    RDE_REQUIRE(n >= 1, ParameterError, "tail_H: n must be >= 1");
    std::size_t const m = r_grid.size();
    double const cap = u * r_grid.back();
    auto rows = parallel_map<std::vector<unsigned char>>(n, workers, [&](std::size_t i) {
        auto env = replica_env(kappa, fam, i, opts.h);
        auto s = walk_family(fam).at(i);
        auto hs = hitting_times(env, r_grid, s, opts.walk, cap);
        std::vector<unsigned char> hit(m);
        for (std::size_t j = 0; j < m; ++j)
            hit[j] = !hs[j].reached || hs[j].H > u * r_grid[j];
        return hit;
    });
    HTail out;
    for (std::size_t j = 0; j < m; ++j)
    {
        std::size_t hits = 0;
        for (auto const& row : rows)
            hits += row[j];
        out.curve.points.push_back(analysis::make_tail_point(r_grid[j], n, hits));
        if (hits == 0)
        {
            std::ostringstream msg;
            msg << "tail_H: no hits at r = " << r_grid[j];
            out.diagnostics.warn(msg.str());
        }
    }
    std::size_t usable = std::count_if(out.curve.points.begin(), out.curve.points.end(),
                                       [](auto const& p) { return p.hits > 0; });
    if (usable >= 3)
        analysis::fit_loglog_slope(out.curve);
    else
        out.diagnostics.warn("tail_H: fewer than 3 cells with hits, slope not fitted");
    return out;
}

StableLimitResult stable_limit_check(double kappa, double r, std::size_t n,
                                     StreamFamily const& fam, unsigned workers,
                                     double threshold, EnvOptions const& opts)
{
    RDE_REQUIRE(kappa > 1 && kappa < 2, DomainError,
                "stable_limit_check: needs 1 < kappa < 2");
    double const mean_rate = 4 / (kappa - 1);
    auto normalize = [&](double rr, std::uint64_t tag, std::vector<double>* ratios) {
        StreamFamily sub{fam.seed, sampling::derive_stream(fam.domain, tag)};
        auto sample = sample_hitting(kappa, rr, n, sub, workers, opts);
        std::vector<double> z;
        for (auto const& d : sample.draws)
        {
            z.push_back((d.H - mean_rate * rr) / std::pow(rr, 1 / kappa));
            if (ratios)
                ratios->push_back(d.H / rr);
        }
        return z;
    };
    StableLimitResult out;
    std::vector<double> ratios;
    out.normalized_r = normalize(r, 1, &ratios);
    out.normalized_2r = normalize(2 * r, 2, nullptr);
    out.ks = analysis::ks_two_sample(out.normalized_r, out.normalized_2r, threshold);
    out.median_ratio = analysis::median(ratios);
    out.expected_ratio = mean_rate;
    return out;
}

SigmaGrowthResult sigma_growth_check(double kappa, std::vector<double> const& r_grid,
                                     std::size_t n, StreamFamily const& fam,
                                     unsigned workers, double h)
{
    RDE_REQUIRE(kappa > 1, DomainError, "sigma_growth_check: needs kappa > 1");
    RDE_REQUIRE(!r_grid.empty(), ParameterError, "sigma_growth_check: empty r grid");
    std::size_t const m = r_grid.size();
    auto rows = parallel_map<std::vector<double>>(n, workers, [&](std::size_t i) {
        auto env = replica_env(kappa, fam, i, h);
        std::vector<double> v(m);
        for (std::size_t j = 0; j < m; ++j)
            v[j] = log_sigma(env, r_grid[j]);
        return v;
    });
    SigmaGrowthResult out;
    out.r_grid = r_grid;
    out.expected = kappa / 2;
    std::vector<double> mean_log;
    for (std::size_t j = 0; j < m; ++j)
    {
        double r = r_grid[j];
        std::vector<double> ratio;
        std::size_t dev = 0;
        for (auto const& row : rows)
        {
            ratio.push_back(row[j] / r);
            dev += std::fabs(row[j] - kappa * r / 2) > 0.5 * r;
        }
        out.ratio.push_back(analysis::estimate_mean(ratio));
        out.deviation_freq.push_back(static_cast<double>(dev) / static_cast<double>(n));
        mean_log.push_back(out.ratio.back().mean * r);
    }
    // Ordinary least squares of mean log Sigma on r.
    if (m >= 2)
    {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (std::size_t j = 0; j < m; ++j)
        {
            sx += r_grid[j];
            sy += mean_log[j];
            sxx += r_grid[j] * r_grid[j];
            sxy += r_grid[j] * mean_log[j];
        }
        double dm = static_cast<double>(m);
        out.fit.slope = (dm * sxy - sx * sy) / (dm * sxx - sx * sx);
        out.fit.intercept = (sy - out.fit.slope * sx) / dm;
        out.fit.log_r = r_grid;
        out.fit.log_p = mean_log;
    }
    return out;
}

DualityResult duality_check(double kappa, double v, double t, std::size_t n,
                            StreamFamily const& fam, unsigned workers,
                            EnvOptions const& opts)
{
    RDE_REQUIRE(v > 0 && t > 0, ParameterError, "duality_check: need v > 0 and t > 0");
    double const r = v * t;
    struct Pair
    {
        bool below = false;
        bool late = false;
    };
    auto pairs = parallel_map<Pair>(n, workers, [&](std::size_t i) {
        auto env = replica_env(kappa, fam, i, opts.h);
        auto s = walk_family(fam).at(i);
        CellChain chain(env, opts.walk.cell);
        auto target = static_cast<std::int64_t>(std::ceil(r / opts.walk.cell - 1e-9));
        WalkState st;
        Pair p;
        bool reached = false;
        for (;;)
        {
            if (st.node >= target)
                reached = true;
            auto const& nd = chain.node(st.node);
            if (st.clock + nd.hold_left + nd.hold_right > t)
                break;
            walk_step(chain, st, s);
        }
        p.below = chain.position(st.node) < r;
        p.late = !reached;
        return p;
    });
    std::vector<bool> below, late, backtrack;
    for (auto const& p : pairs)
    {
        below.push_back(p.below);
        late.push_back(p.late);
        backtrack.push_back(p.below && !p.late);
    }
    DualityResult out;
    out.p_position = analysis::estimate_mean(indicator(below));
    out.p_hitting = analysis::estimate_mean(indicator(late));
    out.backtrack = analysis::estimate_mean(indicator(backtrack));
    return out;
}

SInfinityResult s_infinity_check(double kappa, std::size_t n, StreamFamily const& fam,
                                 unsigned workers, double threshold, double h)
{
    RDE_REQUIRE(kappa > 1, DomainError, "s_infinity_check: needs kappa > 1");
    SInfinityResult out;
    out.values = parallel_map<double>(n, workers, [&](std::size_t i) {
        auto env = replica_env(kappa, fam, i, h);
        return s_infinity(env);
    });
    out.mean = analysis::estimate_mean(out.values);
    out.expected = bessel::dufresne_mean(kappa);
    out.ks = analysis::ks_one_sample_sorted(
        out.values,
        [&](std::vector<double> const& sorted) {
            return bessel::dufresne_cdf_sorted(sorted, kappa);
        },
        threshold);
    return out;
}

}  // namespace rde::environment
