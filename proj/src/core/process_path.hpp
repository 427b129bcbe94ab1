#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace rde
{
//! Sampled path on a uniform time grid t0, t0 + dt, t0 + 2 dt, ...
struct ProcessPath
{
    double t0 = 0;
    double dt = 1;
    std::vector<double> values;
    std::optional<double> absorbed_at;

    std::size_t size() const { return values.size(); }
    double time(std::size_t i) const { return t0 + dt * static_cast<double>(i); }
    double end_time() const
    {
        return values.empty() ? t0 : time(values.size() - 1);
    }

    //! Linear interpolation, clamped to the recorded range.
    double at(double t) const;
};

//! Path recorded against an increasing but non-uniform clock.
struct ClockedPath
{
    std::vector<double> clock;
    std::vector<double> values;

    double at(double c) const;
};

//! Non-fatal observations raised while sampling (truncation, saturation...).
struct Diagnostics
{
    std::vector<std::string> messages;

    void warn(std::string msg) { messages.push_back(std::move(msg)); }
    bool empty() const { return messages.empty(); }
};

}  // namespace rde
