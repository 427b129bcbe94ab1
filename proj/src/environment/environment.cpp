#include "environment.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>

#include "core/errors.hpp"
#include "sampling/distributions.hpp"

namespace rde::environment
{
namespace
{
// Neumaier compensated sum.
struct CompensatedSum
{
    double sum = 0;
    double comp = 0;

    void add(double v)
    {
        double t = sum + v;
        if (std::fabs(sum) >= std::fabs(v))
            comp += (sum - t) + v;
        else
            comp += (v - t) + sum;
        sum = t;
    }
    double value() const { return sum + comp; }
};

double log_add(double a, double b)
{
    if (a < b)
        std::swap(a, b);
    if (b == -std::numeric_limits<double>::infinity())
        return a;
    return a + std::log1p(std::exp(b - a));
}

// Cumulative trapezoid of exp(sign * W) from 0 outward along one side.
// Returns the values at nodes 0, 1, ... while they stay finite and strictly
// increasing in magnitude.
std::vector<double> cumulative_side(std::vector<double> const& w, double h,
                                    double sign)
{
    std::vector<double> out{0.0};
    CompensatedSum acc;
    double prev = std::exp(sign * w[0]);
    for (std::size_t k = 1; k < w.size(); ++k)
    {
        double cur = std::exp(sign * w[k]);
        acc.add(0.5 * h * (prev + cur));
        double v = acc.value();
        if (!std::isfinite(v) || !(v > out.back()))
            break;
        out.push_back(v);
        prev = cur;
    }
    return out;
}

GridFunction assemble(Environment const& env, double sign, char const* name,
                      Diagnostics& diag)
{
    std::vector<double> wr, wl;
    for (std::int64_t n = 0; n <= env.hi(); ++n)
        wr.push_back(env.w_at(n));
    for (std::int64_t n = 0; n >= env.lo(); --n)
        wl.push_back(env.w_at(n));
    // On the left the integral runs from x to 0: accumulate outward and
    // negate.
    auto right = cumulative_side(wr, env.h(), sign);
    auto left = cumulative_side(wl, env.h(), sign);
    if (right.size() < wr.size() || left.size() < wl.size())
    {
        std::ostringstream msg;
        msg << name << " kept on [" << env.x(1 - static_cast<std::int64_t>(left.size()))
            << ", " << env.x(static_cast<std::int64_t>(right.size()) - 1)
            << "] of the generated range (overflow or no double-precision growth)";
        diag.warn(msg.str());
    }
    std::vector<double> xs, ys;
    xs.reserve(left.size() + right.size() - 1);
    ys.reserve(xs.capacity());
    for (std::size_t k = left.size() - 1; k > 0; --k)
    {
        xs.push_back(env.x(-static_cast<std::int64_t>(k)));
        ys.push_back(-left[k]);
    }
    for (std::size_t k = 0; k < right.size(); ++k)
    {
        xs.push_back(env.x(static_cast<std::int64_t>(k)));
        ys.push_back(right[k]);
    }
    return GridFunction(std::move(xs), std::move(ys));
}
}  // namespace

Environment::Environment(double kappa, double h, sampling::RngStream const& stream,
                         double extent)
    : kappa_(kappa), h_(h), seed_(stream.seed()), stream_id_(stream.stream_id())
{
    RDE_REQUIRE(kappa > 0 && h > 0 && extent >= 0, ParameterError,
                "Environment: need kappa > 0, h > 0, extent >= 0");
    auto n = static_cast<std::int64_t>(std::ceil(extent / h));
    ensure(n);
    ensure(-n);
}

Environment Environment::frozen(double kappa, double h, std::vector<double> w_left,
                                std::vector<double> w_right)
{
    RDE_REQUIRE(kappa > 0 && h > 0, ParameterError,
                "Environment::frozen: need kappa > 0 and h > 0");
    RDE_REQUIRE(!w_left.empty() && !w_right.empty() && w_left[0] == 0 && w_right[0] == 0,
                ParameterError, "Environment::frozen: both halves must start with W(0) = 0");
    Environment env;
    env.kappa_ = kappa;
    env.h_ = h;
    env.frozen_ = true;
    env.left_ = std::move(w_left);
    env.right_ = std::move(w_right);
    return env;
}

void Environment::ensure(std::int64_t n)
{
    while (n > hi())
        grow(true);
    while (n < lo())
        grow(false);
}

double Environment::w_at(std::int64_t n) const
{
    RDE_REQUIRE(n >= lo() && n <= hi(), DomainError,
                "Environment: grid index outside the generated range");
    return n >= 0 ? right_[static_cast<std::size_t>(n)]
                  : left_[static_cast<std::size_t>(-n)];
}

void Environment::grow(bool right_side)
{
    RDE_REQUIRE(!frozen_, DomainError,
                "Environment: frozen environment breached its extent");
    auto& side = right_side ? right_ : left_;
    auto block = static_cast<std::uint64_t>((side.size() - 1) / kBlock);
    sampling::RngStream s(seed_, sampling::derive_stream(stream_id_,
                                                         2 * block + (right_side ? 0 : 1)));
    double const sd = std::sqrt(h_);
    // Moving away from 0: W drifts down by kappa h / 2 on the right and up on
    // the left.
    double const drift = (right_side ? -0.5 : 0.5) * kappa_ * h_;
    side.reserve(side.size() + kBlock);
    double w = side.back();
    for (std::int64_t k = 0; k < kBlock; ++k)
    {
        w += sd * sampling::draw_gaussian(s) + drift;
        side.push_back(w);
    }
}

Environment sample_environment(double kappa, double extent, double h,
                               sampling::RngStream const& stream)
{
    return Environment(kappa, h, stream, extent);
}

ScalePair build_scales(Environment const& env)
{
    ScalePair out;
    out.S = assemble(env, 1.0, "S", out.diagnostics);
    out.Sigma = assemble(env, -1.0, "Sigma", out.diagnostics);
    return out;
}

double s_infinity(Environment& env, double rel_tol)
{
    RDE_REQUIRE(env.kappa() > 1, DomainError, "s_infinity: needs kappa > 1");
    double const h = env.h();
    double const tail_factor = 2 / (env.kappa() - 1);
    CompensatedSum acc;
    double prev = 1;  // exp(W(0))
    for (std::int64_t n = 1;; ++n)
    {
        double cur = std::exp(env.w(n));
        acc.add(0.5 * h * (prev + cur));
        prev = cur;
        if (cur * tail_factor < rel_tol * acc.value())
            return acc.value();
    }
}

double log_sigma(Environment& env, double r)
{
    RDE_REQUIRE(r > 0, ParameterError, "log_sigma: r must be > 0");
    double const h = env.h();
    auto n_end = static_cast<std::int64_t>(std::floor(r / h));
    double acc = -std::numeric_limits<double>::infinity();
    double const log_half_h = std::log(0.5 * h);
    double prev = -env.w(0);
    for (std::int64_t n = 1; n <= n_end; ++n)
    {
        double cur = -env.w(n);
        acc = log_add(acc, log_half_h + log_add(prev, cur));
        prev = cur;
    }
    double rest = r - env.x(n_end);
    if (rest > 0)
    {
        // Partial last cell, linear W.
        double w1 = env.w(n_end + 1);
        double w_r = -(env.w(n_end) + (w1 - env.w(n_end)) * rest / h);
        acc = log_add(acc, std::log(0.5 * rest) + log_add(prev, w_r));
    }
    return acc;
}

void write_snapshot(Environment const& env, std::ostream& os)
{
    char buf[64];
    os << "# rdelab environment v1\n";
    std::snprintf(buf, sizeof buf, "%.17g", env.kappa());
    os << "# kappa " << buf << '\n';
    std::snprintf(buf, sizeof buf, "%.17g", env.h());
    os << "# h " << buf << '\n';
    os << "x W\n";
    for (std::int64_t n = env.lo(); n <= env.hi(); ++n)
    {
        std::snprintf(buf, sizeof buf, "%.17g %.17g", env.x(n), env.w_at(n));
        os << buf << '\n';
    }
}

Environment read_snapshot(std::istream& is)
{
    std::string line;
    RDE_REQUIRE(std::getline(is, line) && line == "# rdelab environment v1",
                OperationalError, "read_snapshot: missing header line");
    auto read_key = [&](char const* key) {
        std::string hash, name;
        double v = 0;
        RDE_REQUIRE(std::getline(is, line), OperationalError, "read_snapshot: truncated header");
        std::istringstream ls(line);
        ls >> hash >> name >> v;
        RDE_REQUIRE(ls && hash == "#" && name == key, OperationalError,
                    std::string("read_snapshot: expected '# ") + key + "'");
        return v;
    };
    double kappa = read_key("kappa");
    double h = read_key("h");
    RDE_REQUIRE(std::getline(is, line) && line == "x W", OperationalError,
                "read_snapshot: missing column header 'x W'");
    std::vector<double> xs, ws;
    double x = 0, w = 0;
    while (is >> x >> w)
    {
        xs.push_back(x);
        ws.push_back(w);
    }
    std::size_t zero = xs.size();
    for (std::size_t i = 0; i < xs.size(); ++i)
        if (std::fabs(xs[i]) < 0.5 * h)
            zero = i;
    RDE_REQUIRE(zero < xs.size() && ws[zero] == 0, OperationalError,
                "read_snapshot: no node at x = 0 with W = 0");
    std::vector<double> left, right;
    for (std::size_t i = zero + 1; i-- > 0;)
        left.push_back(ws[i]);
    for (std::size_t i = zero; i < ws.size(); ++i)
        right.push_back(ws[i]);
    return Environment::frozen(kappa, h, std::move(left), std::move(right));
}

}  // namespace rde::environment
