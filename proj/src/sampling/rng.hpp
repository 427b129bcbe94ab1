#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <string_view>

namespace rde::sampling
{
//! Philox4x32-10 block function (Salmon et al., Random123).
std::array<std::uint32_t, 4>
philox4x32(std::array<std::uint32_t, 4> ctr, std::array<std::uint32_t, 2> key);

//---------------------------------------------------------------------------//
/*!
 * Counter-based random stream addressed by (seed, stream_id).
 *
 * Word k of the stream is half of the Philox block whose 128-bit counter is
 * (k / 2, stream_id) under key seed. Nothing depends on how many other
 * streams exist or on the order in which they are consumed, so replicas keyed
 * by index reproduce bit-for-bit under any worker count.
 *
 * Models std::uniform_random_bit_generator.
 */
class RngStream
{
  public:
    using result_type = std::uint64_t;

    RngStream() = default;
    RngStream(std::uint64_t seed, std::uint64_t stream_id)
        : seed_(seed), stream_id_(stream_id)
    {
    }

    static constexpr result_type min() { return 0; }
    static constexpr result_type max()
    {
        return std::numeric_limits<result_type>::max();
    }

    result_type operator()() { return next_u64(); }
    std::uint64_t next_u64();

    //! Uniform on the open interval (0, 1), 53-bit resolution.
    double uniform()
    {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream_id() const { return stream_id_; }
    //! Number of 64-bit words consumed so far.
    std::uint64_t counter() const { return counter_; }

  private:
    std::uint64_t seed_ = 0;
    std::uint64_t stream_id_ = 0;
    std::uint64_t counter_ = 0;
    std::uint64_t cached_block_ = ~std::uint64_t{0};
    std::array<std::uint64_t, 2> cache_{};
};

//! SplitMix64 finalizer; used to derive independent stream ids.
constexpr std::uint64_t mix64(std::uint64_t z)
{
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

//! Stream id for a (domain, index) pair, e.g. (check tag, replica).
constexpr std::uint64_t derive_stream(std::uint64_t domain, std::uint64_t index)
{
    return mix64(mix64(domain) ^ (index + 0x632be59bd9b4e019ULL));
}

//! FNV-1a, for turning check names into stable stream domains.
constexpr std::uint64_t hash_name(std::string_view name)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : name)
    {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

//! A family of replica streams sharing one seed under one domain tag.
struct StreamFamily
{
    std::uint64_t seed = 0;
    std::uint64_t domain = 0;

    RngStream at(std::uint64_t index) const
    {
        return RngStream(seed, derive_stream(domain, index));
    }
};

}  // namespace rde::sampling
