// Registered verification checks.
//
// KS thresholds are the asymptotic critical distances at alpha = 1e-3 for
// the sample sizes actually used (analysis::ks_critical_*), so a check fails
// by chance about once in a thousand runs of a correct sampler. Relative
// error checks use the stated tolerance or three standard errors, whichever
// is wider, so a reduced replica count does not turn noise into failures.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <span>
#include <sstream>

#include "analysis/sturm_liouville.hpp"
#include "bessel/besq.hpp"
#include "bessel/dufresne.hpp"
#include "bessel/perpetuity.hpp"
#include "core/errors.hpp"
#include "environment/experiments.hpp"
#include "jacobi/t_half.hpp"
#include "jacobi/upsilon.hpp"
#include "jacobi/warren_yor.hpp"
#include "localtime/brownian.hpp"
#include "localtime/identities.hpp"
#include "registry.hpp"
#include "sampling/replicas.hpp"

namespace rde::orchestrator
{
namespace
{
using sampling::RngStream;
constexpr double kAlpha = 1e-3;

double ks1(std::size_t n)
{
    return analysis::ks_critical_one_sample(n, kAlpha);
}
double ks2(std::size_t n1, std::size_t n2)
{
    return analysis::ks_critical_two_sample(n1, n2, kAlpha);
}

KsRow ks_row(std::string check, analysis::KsResult const& r)
{
    return {std::move(check), r.n1, r.n2.value_or(0), r.statistic, r.pass_threshold, r.pass};
}

// |estimate/target - 1| against max(tol, 3 se/target).
void relative_verdict(CheckRecord& rec, analysis::MomentEstimate const& m, double target,
                      double tol)
{
    rec.statistic = std::fabs(m.mean / target - 1);
    rec.threshold = std::max(tol, 3 * m.std_error / std::fabs(target));
    rec.pass = rec.statistic < rec.threshold;
    rec.values.emplace_back("estimate", m.mean);
    rec.values.emplace_back("std_error", m.std_error);
    rec.values.emplace_back("target", target);
}

environment::EnvOptions env_options(CheckContext const& ctx, double h, double cell)
{
    environment::EnvOptions o;
    o.h = ctx.dt("env", h);
    o.walk.cell = ctx.dt("cell", cell);
    return o;
}

//---------------------------------------------------------------------------//
CheckRecord dufresne(CheckContext const& ctx)
{
    double const kappa = ctx.kappa(2);
    std::size_t const n = ctx.n(20000);
    bessel::SInfinityOptions o;
    o.dt = ctx.dt("s_infinity", o.dt);
    auto xs = sampling::draw_many(n, ctx.workers(), ctx.family(), [&](RngStream& s) {
        return bessel::sample_s_infinity(kappa, s, o);
    });
    auto ks = analysis::ks_one_sample_sorted(
        xs, [&](auto const& v) { return bessel::dufresne_cdf_sorted(v, kappa); }, ks1(n));
    CheckRecord rec;
    bool mean_ok = true;
    if (kappa > 1)  // the mean is infinite otherwise
    {
        relative_verdict(rec, analysis::estimate_mean(xs), bessel::dufresne_mean(kappa), 0.02);
        mean_ok = rec.pass;
        rec.values.emplace_back("mean_rel_error", rec.statistic);
    }
    rec.statistic = ks.statistic;
    rec.threshold = ks.pass_threshold;
    rec.pass = ks.pass && mean_ok;
    rec.n = n;
    rec.ks.push_back(ks_row("dufresne", ks));
    rec.samples.emplace_back("dufresne_samples", std::move(xs));
    return rec;
}

CheckRecord getoor_sharpe(CheckContext const& ctx)
{
    std::size_t const n = ctx.n(1000000);
    auto r = localtime::getoor_sharpe_check(0.5, 0.5, n, ctx.family(), ctx.workers());
    // At 4uz = 1 the plain estimator mean(exp(u L)) has infinite variance,
    // so the verdict uses the conditional mean (1 - 2uz)^(-K) given the
    // Poisson count of the same draws. The plain estimate is reported.
    CheckRecord rec;
    relative_verdict(rec, {r.conditional_estimate, r.conditional_stderr, n}, r.closed_form,
                     0.005);
    rec.values.emplace_back("plain_estimate", r.mc_estimate);
    rec.values.emplace_back("plain_rel_error", r.rel_error);
    rec.n = n;
    return rec;
}

CheckRecord ray_knight_first(CheckContext const& ctx)
{
    std::size_t const n = ctx.n(20000);
    localtime::Rk1Options o;
    o.dt = ctx.dt("rk1", 1e-4);
    auto l0 = sampling::map_replicas<double>(n, ctx.workers(), ctx.family(),
                                             [&](std::size_t, RngStream& s) {
                                                 return localtime::sample_rk1_levels(1.0, {0.0}, o, s)
                                                     .local_times[0];
                                             });
    auto ks = analysis::ks_one_sample(
        l0, [](double x) { return x <= 0 ? 0.0 : -std::expm1(-x / 2); }, ks1(n));
    CheckRecord rec;
    relative_verdict(rec, analysis::estimate_mean(l0), 2.0, 0.03);
    bool mean_ok = rec.pass;
    rec.values.emplace_back("mean_rel_error", rec.statistic);
    rec.statistic = ks.statistic;
    rec.threshold = ks.pass_threshold;
    rec.pass = ks.pass && mean_ok;
    rec.n = n;
    rec.ks.push_back(ks_row("ray_knight_first", ks));
    return rec;
}

CheckRecord biane_yor(CheckContext const& ctx)
{
    std::size_t const n = ctx.n(20000);
    auto r = localtime::biane_yor_stable_check(0.5, 1.0, n, ks2(n, n), ctx.family(),
                                               ctx.workers());
    CheckRecord rec;
    rec.statistic = r.ks.statistic;
    rec.threshold = r.ks.pass_threshold;
    rec.pass = r.ks.pass;
    rec.n = n;
    rec.values.emplace_back("truncated", static_cast<double>(r.truncated));
    rec.ks.push_back(ks_row("biane_yor", r.ks));
    return rec;
}

CheckRecord cauchy(CheckContext const& ctx)
{
    std::size_t const n = ctx.n(20000);
    auto r = localtime::cauchy_identity_check(n, ks2(n, n), ctx.family(), ctx.workers());
    CheckRecord rec;
    rec.statistic = r.ks.statistic;
    rec.threshold = r.ks.pass_threshold;
    rec.pass = r.ks.pass;
    rec.n = n;
    rec.values.emplace_back("centering", localtime::cauchy_centering());
    rec.values.emplace_back("statistic_plus_euler_centering", r.statistic_plus_euler);
    rec.note = "location log(pi/4) - 2 gamma_E; the +2 gamma_E location is reported for comparison";
    rec.ks.push_back(ks_row("cauchy", r.ks));
    return rec;
}

CheckRecord warren_yor(CheckContext const& ctx)
{
    std::size_t const n = ctx.n(20000);
    jacobi::WarrenYorOptions o;
    o.besq_dt = ctx.dt("besq", o.besq_dt);
    o.jacobi_dt = ctx.dt("jacobi", o.jacobi_dt);
    o.threshold = ks2(n, n);
    auto r = jacobi::warren_yor_check(ctx.kappa(2), 0.1, n, ctx.family(), ctx.workers(), o);
    CheckRecord rec;
    rec.statistic = std::max(r.ratio_ks.statistic, r.sum_ks.statistic);
    rec.threshold = o.threshold;
    rec.pass = r.ratio_ks.pass && r.sum_ks.pass && r.shortfalls == 0;
    rec.n = n;
    rec.values.emplace_back("ratio_ks", r.ratio_ks.statistic);
    rec.values.emplace_back("additivity_ks", r.sum_ks.statistic);
    rec.values.emplace_back("shortfalls", static_cast<double>(r.shortfalls));
    rec.ks.push_back(ks_row("warren_yor_ratio", r.ratio_ks));
    rec.ks.push_back(ks_row("warren_yor_additivity", r.sum_ks));
    return rec;
}

jacobi::THalfOptions t_half_options(CheckContext const& ctx)
{
    jacobi::THalfOptions o;
    o.dt = ctx.dt("t_half", o.dt);
    return o;
}

CheckRecord t_half_mean(CheckContext const& ctx)
{
    std::size_t const n = ctx.n(20000);
    auto r = jacobi::t_half_mean_check(ctx.kappa(2), n, ctx.family(), ctx.workers(),
                                       t_half_options(ctx));
    CheckRecord rec;
    relative_verdict(rec, {r.mean, r.std_error, n}, r.series, 0.02);
    rec.pass = rec.pass && r.shortfalls == 0;
    rec.n = n;
    return rec;
}

CheckRecord t_half_series(CheckContext const&)
{
    double const closed = (5 + 2 * std::numbers::ln2) / 12;
    auto s = jacobi::t_half_moment_series(2, 50);
    CheckRecord rec;
    rec.statistic = std::fabs(s.value - closed);
    rec.threshold = 1e-6;
    rec.pass = rec.statistic < rec.threshold;
    rec.n = 50;
    rec.values.emplace_back("series", s.value);
    rec.values.emplace_back("closed_form", closed);
    rec.values.emplace_back("remainder_bound", s.remainder_bound);
    return rec;
}

CheckRecord hypergeometric_laplace(CheckContext const& ctx)
{
    std::size_t const n = ctx.n(20000);
    auto r = jacobi::hypergeom_laplace_check(ctx.kappa(2), 0.5, n, ctx.family(), ctx.workers(),
                                             t_half_options(ctx));
    CheckRecord rec;
    relative_verdict(rec, {r.mc, r.std_error, n}, r.closed_form, 0.01);
    rec.pass = rec.pass && r.shortfalls == 0;
    rec.n = n;
    rec.values.emplace_back("a", r.a);
    rec.values.emplace_back("b", r.b);
    return rec;
}

CheckRecord sup_law(CheckContext const& ctx)
{
    std::size_t const n = ctx.n(10000);
    double const dt = ctx.dt("sup", 1e-4);
    double const us[] = {2, 4, 8};
    auto maxima = sampling::draw_many(n, ctx.workers(), ctx.family(), [&](RngStream& s) {
        return bessel::besq0_running_max(1, 8, dt, s);
    });
    CheckRecord rec;
    rec.n = n;
    double worst = 0, worst_se = 0;
    for (double u : us)
    {
        auto hits = std::count_if(maxima.begin(), maxima.end(), [&](double m) { return m > u; });
        auto pt = analysis::make_tail_point(u, n, static_cast<std::size_t>(hits));
        double rel = std::fabs(pt.p_hat * u - 1);
        rec.values.emplace_back("p_hat_u" + std::to_string(static_cast<int>(u)), pt.p_hat);
        if (rel > worst)
            worst = rel;
        worst_se = std::max(worst_se, pt.std_error * u);
    }
    rec.statistic = worst;
    rec.threshold = std::max(0.05, 3 * worst_se);
    rec.pass = rec.statistic < rec.threshold;
    return rec;
}

CheckRecord perpetuity(CheckContext const& ctx)
{
    std::size_t const n = ctx.n(5000);
    double const d = 6, b = 4;
    double const scale = bessel::perpetuity_scale(b);
    double const index = bessel::perpetuity_index(d, b);
    auto ys = sampling::draw_many(n, ctx.workers(), ctx.family(), [&](RngStream& s) {
        return bessel::sample_perpetuity(d, b, 1e6, s).value;
    });
    auto ks = analysis::ks_one_sample_sorted(
        ys,
        [&](std::vector<double> const& sorted) {
            std::vector<double> scaled(sorted);
            for (auto& v : scaled)
                v /= scale;
            return bessel::dufresne_cdf_sorted(scaled, index);
        },
        ks1(n));
    // Below the moment threshold (d-2)/(b-2) = 2 the p = 1 estimate must be
    // stable between the first half and the whole sample; above it (p = 4)
    // a single draw carries a visible share of the sum.
    std::span<double const> all(ys), half(ys.data(), n / 2);
    double m_all = analysis::estimate_abs_moment(all, 1).mean;
    double m_half = analysis::estimate_abs_moment(half, 1).mean;
    double stability = std::fabs(m_half / m_all - 1);
    auto share = [&](double p) {
        double sum = 0, top = 0;
        for (double y : ys)
        {
            double v = std::pow(y, p);
            sum += v;
            top = std::max(top, v);
        }
        return top / sum;
    };
    double share_low = share(1), share_high = share(4);
    CheckRecord rec;
    rec.statistic = ks.statistic;
    rec.threshold = ks.pass_threshold;
    rec.pass = ks.pass && stability < 0.05 && share_high > 0.05;
    rec.n = n;
    rec.values.emplace_back("moment1_half_vs_full", stability);
    rec.values.emplace_back("max_share_p1", share_low);
    rec.values.emplace_back("max_share_p4", share_high);
    rec.ks.push_back(ks_row("perpetuity", ks));
    return rec;
}

CheckRecord sturm_liouville(CheckContext const& ctx)
{
    std::size_t const n = ctx.n(20000);
    double const lambda = 0.1, eps = 0.1, gamma = 0.5;
    auto mc = localtime::weighted_local_time_laplace(lambda, eps, gamma, n, ctx.family(),
                                                     ctx.workers());
    auto sol = analysis::solve_sturm_liouville(lambda, eps, gamma);
    double target = std::exp(sol.phi_prime_at_zero / 2);
    double closed = analysis::cylindrical_crosscheck(lambda, eps, gamma, 2.0);
    double cross = std::fabs(sol.phi_prime_at_zero / closed - 1);
    CheckRecord rec;
    relative_verdict(rec, {mc.estimate, mc.std_error, n}, target, 0.02);
    rec.pass = rec.pass && cross < 0.005;
    rec.n = n;
    rec.values.emplace_back("phi_prime_ode", sol.phi_prime_at_zero);
    rec.values.emplace_back("phi_prime_cylindrical", closed);
    rec.values.emplace_back("ode_vs_cylindrical", cross);
    return rec;
}

//---------------------------------------------------------------------------//
CheckRecord upsilon_tail(CheckContext const& ctx)
{
    double const kappa = 1.5, u = 7;
    std::size_t const n = ctx.n(4000);
    jacobi::UpsilonTailOptions o;
    o.dt = ctx.dt("upsilon", o.dt);
    auto t = jacobi::tail_upsilon(kappa, u, ctx.r_grid({25, 50, 100, 200}), n, ctx.family(),
                                  ctx.workers(), o);
    CheckRecord rec;
    rec.n = n;
    rec.threshold = 0.35;
    if (t.curve.fitted)
    {
        rec.statistic = std::fabs(t.curve.fit.slope - (1 - kappa));
        rec.values.emplace_back("slope", t.curve.fit.slope);
        rec.values.emplace_back("slope_stderr", t.curve.fit.slope_stderr);
    }
    else
    {
        rec.statistic = std::numeric_limits<double>::infinity();
        rec.note = "slope not fitted: fewer than three cells with hits";
    }
    rec.pass = t.curve.fitted && rec.statistic < rec.threshold;
    rec.tail = t.curve;
    return rec;
}

CheckRecord upsilon_ratio(CheckContext const& ctx)
{
    double const kappa = 2, u = 3;
    std::size_t const n = ctx.n(4000);
    jacobi::UpsilonTailOptions o;
    o.dt = ctx.dt("upsilon", o.dt);
    auto t = jacobi::tail_upsilon(kappa, u, {50, 100, 200}, n, ctx.family(), ctx.workers(), o);
    auto const& p1 = t.curve.points[1];
    auto const& p2 = t.curve.points[2];
    CheckRecord rec;
    rec.n = n;
    rec.threshold = 2;
    rec.tail = t.curve;
    if (p1.hits == 0 || p2.hits == 0)
    {
        rec.statistic = std::numeric_limits<double>::infinity();
        rec.note = "no hits at r = 100 or r = 200";
        return rec;
    }
    double ratio = p2.p_hat / p1.p_hat;
    // Delta method, treating the two cells as independent; the positive
    // correlation from shared paths makes this conservative.
    double se = ratio * std::hypot(p1.std_error / p1.p_hat, p2.std_error / p2.p_hat);
    rec.statistic = std::fabs(ratio - 0.5) / se;
    rec.pass = rec.statistic < rec.threshold;
    rec.values.emplace_back("ratio", ratio);
    rec.values.emplace_back("ratio_stderr", se);
    return rec;
}

CheckRecord h_tail(CheckContext const& ctx)
{
    double const kappa = 1.5, u = 16;
    std::size_t const n = ctx.n(2000);
    auto t = environment::tail_H(kappa, u, ctx.r_grid({10, 20, 40}), n, ctx.family(),
                                 ctx.workers(), env_options(ctx, 1e-3, 0.05));
    CheckRecord rec;
    rec.n = n;
    rec.tail = t.curve;
    rec.threshold = 0.5;
    if (!t.curve.fitted)
    {
        rec.statistic = std::numeric_limits<double>::infinity();
        rec.note = "slope not fitted: fewer than three cells with hits";
        return rec;
    }
    // Informational band: slope within 0.5 of 1 - kappa.
    rec.statistic = std::fabs(t.curve.fit.slope - (1 - kappa));
    rec.pass = rec.statistic <= rec.threshold;
    rec.values.emplace_back("slope", t.curve.fit.slope);
    rec.values.emplace_back("slope_stderr", t.curve.fit.slope_stderr);
    rec.note = "informational: convergence in log r is slow";
    return rec;
}

CheckRecord stable_limit(CheckContext const& ctx)
{
    std::size_t const n = ctx.n(1000);
    auto r = environment::stable_limit_check(1.5, 100, n, ctx.family(), ctx.workers(),
                                             ks2(n, n), env_options(ctx, 1e-2, 0.1));
    CheckRecord rec;
    rec.statistic = r.ks.statistic;
    rec.threshold = r.ks.pass_threshold;
    rec.pass = r.ks.pass;
    rec.n = n;
    rec.values.emplace_back("median_H_over_r", r.median_ratio);
    rec.values.emplace_back("mean_rate", r.expected_ratio);
    rec.ks.push_back(ks_row("stable_limit", r.ks));
    return rec;
}

//---------------------------------------------------------------------------//
CheckRecord speed(CheckContext const& ctx)
{
    double const kappa = ctx.kappa(3);
    std::size_t const n = ctx.n(100);
    // Without a speed X(t)/t decays like t^(kappa - 1); at kappa = 1/2 it
    // falls below 0.02 only after t of about 2000.
    double const t = kappa > 1 ? 1e3 : 4e3;
    auto r = environment::speed_check(kappa, t, n, ctx.family(), ctx.workers(),
                                      env_options(ctx, 1e-3, 0.05));
    CheckRecord rec;
    rec.n = n;
    if (r.expected > 0)
        relative_verdict(rec, r.mean, r.expected, 0.1);
    else
    {
        rec.statistic = std::fabs(r.mean.mean);
        rec.threshold = 0.02;
        rec.pass = rec.statistic < rec.threshold;
        rec.values.emplace_back("estimate", r.mean.mean);
        rec.values.emplace_back("std_error", r.mean.std_error);
    }
    rec.values.emplace_back("t", t);
    return rec;
}

CheckRecord speed_control(CheckContext const& ctx)
{
    // kappa < 1: X(t) grows like t^kappa, so mean X(t)/t falls by
    // 4^(1 - kappa) when t is multiplied by 4.
    double const kappa = 0.5;
    std::size_t const n = ctx.n(200);
    auto o = env_options(ctx, 1e-3, 0.05);
    auto fam = ctx.family();
    auto pairs = parallel_map<std::array<double, 2>>(n, ctx.workers(), [&](std::size_t i) {
        environment::Environment env(kappa, o.h, environment::env_family(fam).at(i));
        auto s = environment::walk_family(fam).at(i);
        auto path = environment::simulate_X(env, 1000, 250, s, o.walk);
        return std::array<double, 2>{path.values[1] / 250, path.values[4] / 1000};
    });
    std::vector<double> a, b;
    for (auto const& p : pairs)
    {
        a.push_back(p[0]);
        b.push_back(p[1]);
    }
    auto ma = analysis::estimate_mean(a);
    auto mb = analysis::estimate_mean(b);
    double ratio = ma.mean / mb.mean;
    double target = std::pow(4.0, 1 - kappa);
    CheckRecord rec;
    rec.n = n;
    rec.statistic = std::fabs(ratio / target - 1);
    rec.threshold = 0.25;
    rec.pass = rec.statistic < rec.threshold;
    rec.values.emplace_back("mean_ratio_t250", ma.mean);
    rec.values.emplace_back("mean_ratio_t1000", mb.mean);
    rec.values.emplace_back("decay", ratio);
    rec.values.emplace_back("decay_target", target);
    return rec;
}

CheckRecord h_mean(CheckContext const& ctx)
{
    std::size_t const n = ctx.n(1000);
    auto r = environment::h_mean_check(ctx.kappa(2), 50, n, ctx.family(), ctx.workers(),
                                       env_options(ctx, 1e-3, 0.05));
    CheckRecord rec;
    relative_verdict(rec, r.ratio, r.expected, 0.1);
    rec.pass = rec.pass && r.max_split_error < 0.01;
    rec.n = n;
    rec.values.emplace_back("max_split_error", r.max_split_error);
    return rec;
}

CheckRecord duality(CheckContext const& ctx)
{
    double const kappa = ctx.kappa(2);
    std::size_t const n = ctx.n(2000);
    auto r = environment::duality_check(kappa, environment::speed_constant(kappa) / 2, 200, n,
                                        ctx.family(), ctx.workers(),
                                        env_options(ctx, 1e-3, 0.05));
    double se = std::hypot(r.p_position.std_error, r.p_hitting.std_error);
    CheckRecord rec;
    rec.n = n;
    rec.statistic = se > 0 ? std::fabs(r.p_position.mean - r.p_hitting.mean) / se : 0;
    rec.threshold = 2;
    rec.pass = rec.statistic < rec.threshold;
    rec.values.emplace_back("p_position_below", r.p_position.mean);
    rec.values.emplace_back("p_hitting_late", r.p_hitting.mean);
    rec.values.emplace_back("backtrack", r.backtrack.mean);
    rec.values.emplace_back("backtrack_stderr", r.backtrack.std_error);
    rec.note = "standard errors combined as if independent; the paired backtrack "
               "probability is reported separately";
    return rec;
}

CheckRecord sigma_growth(CheckContext const& ctx)
{
    double const kappa = ctx.kappa(2);
    std::size_t const n = ctx.n(300);
    auto r = environment::sigma_growth_check(kappa, {100}, n, ctx.family(), ctx.workers(),
                                             ctx.dt("env", 1e-3));
    CheckRecord rec;
    relative_verdict(rec, r.ratio[0], r.expected, 0.05);
    rec.pass = rec.pass && r.deviation_freq[0] < 0.01;
    rec.n = n;
    rec.values.emplace_back("deviation_freq", r.deviation_freq[0]);
    return rec;
}

CheckRecord s_infinity_env(CheckContext const& ctx)
{
    double const kappa = ctx.kappa(2);
    std::size_t const n = ctx.n(10000);
    auto r = environment::s_infinity_check(kappa, n, ctx.family(), ctx.workers(), ks1(n),
                                           ctx.dt("env_sinf", 1e-2));
    CheckRecord rec;
    relative_verdict(rec, r.mean, r.expected, 0.02);
    bool mean_ok = rec.pass;
    rec.values.emplace_back("mean_rel_error", rec.statistic);
    rec.statistic = r.ks.statistic;
    rec.threshold = r.ks.pass_threshold;
    rec.pass = r.ks.pass && mean_ok;
    rec.n = n;
    rec.ks.push_back(ks_row("s_infinity_env", r.ks));
    return rec;
}

std::vector<CheckSpec> build_registry()
{
    using C = Command;
    std::vector<CheckSpec> r;
    auto add = [&](std::string name, std::string anchor, C group, bool kappa, bool grid,
                   CheckRecord (*fn)(CheckContext const&)) {
        r.push_back({std::move(name), std::move(anchor), {group}, kappa, grid, fn});
    };
    add("dufresne", "Dufresne identity: BESQ(2 - 2 kappa) from 4 hits 0 at a time 2/Gamma(kappa)",
        C::verify, true, false, dufresne);
    add("getoor_sharpe", "Getoor-Sharpe: E exp(u L^z_tau(1)) = exp(u/(1 - 2uz))", C::verify,
        false, false, getoor_sharpe);
    add("ray_knight_first", "First Ray-Knight theorem: L^0 at sigma(1) is Exp(mean 2)",
        C::verify, false, false, ray_knight_first);
    add("biane_yor", "Biane-Yor: local-time functional at tau(1) is a 1/2-stable law",
        C::verify, false, false, biane_yor);
    add("cauchy", "Biane-Yor Cauchy case: compensated 1/x local-time functional",
        C::verify, false, false, cauchy);
    add("warren_yor", "Warren-Yor: BESQ ratio on its clock is a Jacobi process; additivity",
        C::verify, true, false, warren_yor);
    add("t_half_mean", "Jacobi entrance from 0: E T_1/2 against its moment series",
        C::verify, true, false, t_half_mean);
    add("t_half_series", "Moment series of T_1/2 against (5 + 2 log 2)/12", C::verify, false,
        false, t_half_series);
    add("hypergeometric_laplace", "Laplace transform of T_1/2 is 1/F(a, b; 1; 1/2)",
        C::verify, true, false, hypergeometric_laplace);
    add("sup_law", "BESQ(0) from 1: P(sup > u) = 1/u", C::verify, false, false, sup_law);
    add("perpetuity", "Bessel perpetuity int R^-b is a scaled Dufresne variable", C::verify,
        false, false, perpetuity);
    add("s_infinity_env", "Scale function at infinity of the drifted potential is Dufresne",
        C::verify, true, false, s_infinity_env);
    add("sigma_growth", "log Sigma(r) / r tends to kappa/2", C::verify, true, false,
        sigma_growth);
    add("sturm_liouville", "Weighted local-time Laplace transform solves a Sturm-Liouville ODE",
        C::sturm, false, false, sturm_liouville);
    add("upsilon_tail", "Tail of Upsilon(r) for the (2, 2 + 2 kappa) Jacobi process, slope 1 - kappa",
        C::tails, false, true, upsilon_tail);
    add("upsilon_ratio", "Upsilon tail at kappa = 2 halves when r doubles", C::tails, false,
        false, upsilon_ratio);
    add("h_tail", "Tail of the hitting time H(r), slope 1 - kappa (informational)", C::tails,
        false, true, h_tail);
    add("stable_limit", "(H(r) - 4r/(kappa - 1)) / r^(1/kappa) stabilizes in law", C::tails,
        false, false, stable_limit);
    add("speed", "Speed of the diffusion: X(t)/t tends to (kappa - 1)^+ / 4", C::speed, true,
        false, speed);
    add("speed_control", "kappa < 1: X(t)/t decays like t^(kappa - 1)", C::speed, false, false,
        speed_control);
    add("h_mean", "H(r)/r tends to 4/(kappa - 1)", C::speed, true, false, h_mean);
    add("duality", "P(X(t) < vt) against P(H(vt) > t) at half the speed", C::speed, true,
        false, duality);
    return r;
}
}  // namespace

std::vector<CheckSpec> const& registry()
{
    static std::vector<CheckSpec> const r = build_registry();
    return r;
}

std::vector<CheckSpec const*> select_checks(RunConfig const& cfg)
{
    auto const& reg = registry();
    std::vector<CheckSpec const*> out;
    if (!cfg.suite.empty())
    {
        for (auto const& name : cfg.suite)
        {
            auto it = std::find_if(reg.begin(), reg.end(),
                                   [&](auto const& c) { return c.name == name; });
            if (it == reg.end())
            {
                std::ostringstream msg;
                msg << "unknown check '" << name << "'; registered checks:";
                for (auto const& c : reg)
                    msg << ' ' << c.name;
                throw ParameterError(msg.str());
            }
            if (std::find(out.begin(), out.end(), &*it) == out.end())
                out.push_back(&*it);
        }
        return out;
    }
    for (auto const& c : reg)
        if (cfg.command == Command::all
            || std::find(c.groups.begin(), c.groups.end(), cfg.command) != c.groups.end())
            out.push_back(&c);
    return out;
}

}  // namespace rde::orchestrator
