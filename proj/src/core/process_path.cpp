#include "process_path.hpp"

#include <algorithm>
#include <cmath>

namespace rde
{
double ProcessPath::at(double t) const
{
    if (values.empty())
        return 0;
    double pos = (t - t0) / dt;
    if (pos <= 0)
        return values.front();
    auto last = static_cast<double>(values.size() - 1);
    if (pos >= last)
        return values.back();
    auto i = static_cast<std::size_t>(pos);
    double frac = pos - static_cast<double>(i);
    return values[i] + frac * (values[i + 1] - values[i]);
}

double ClockedPath::at(double c) const
{
    if (clock.empty())
        return 0;
    if (c <= clock.front())
        return values.front();
    if (c >= clock.back())
        return values.back();
    auto it = std::upper_bound(clock.begin(), clock.end(), c);
    auto i = static_cast<std::size_t>(it - clock.begin());
    double span = clock[i] - clock[i - 1];
    double frac = span > 0 ? (c - clock[i - 1]) / span : 0;
    return values[i - 1] + frac * (values[i] - values[i - 1]);
}

}  // namespace rde
