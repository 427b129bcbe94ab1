#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "core/parallel.hpp"
#include "rng.hpp"

namespace rde::sampling
{
//! Number of draws that share one replica stream in draw_many.
inline constexpr std::size_t kChunkDraws = 4096;

/*!
 * n scalar draws, chunked so that draw i always comes from stream
 * fam.at(i / kChunkDraws). The result depends on (fam, n) only, never on
 * the worker count.
 */
template<class T = double, class F>
std::vector<T> draw_many(std::size_t n, unsigned workers,
                              StreamFamily const& fam, F&& draw)
{
    std::size_t chunks = (n + kChunkDraws - 1) / kChunkDraws;
    auto parts = parallel_map<std::vector<T>>(
        chunks, workers, [&](std::size_t c) {
            RngStream s = fam.at(c);
            std::size_t lo = c * kChunkDraws;
            std::size_t hi = std::min(n, lo + kChunkDraws);
            std::vector<T> out(hi - lo);
            for (auto& v : out)
                v = draw(s);
            return out;
        });
    std::vector<T> all;
    all.reserve(n);
    for (auto& p : parts)
        all.insert(all.end(), p.begin(), p.end());
    return all;
}

//! One replica per stream: result i comes from fam.at(i).
template<class T, class F>
std::vector<T> map_replicas(std::size_t n, unsigned workers,
                            StreamFamily const& fam, F&& fn)
{
    return parallel_map<T>(n, workers, [&](std::size_t i) {
        RngStream s = fam.at(i);
        return fn(i, s);
    });
}

}  // namespace rde::sampling
