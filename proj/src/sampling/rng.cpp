#include "rng.hpp"

namespace rde::sampling
{
namespace
{
constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

struct Block
{
    std::uint32_t c0, c1, c2, c3;
};

inline Block philox_round(Block c, std::uint32_t k0, std::uint32_t k1)
{
    std::uint64_t p0 = static_cast<std::uint64_t>(kMul0) * c.c0;
    std::uint64_t p1 = static_cast<std::uint64_t>(kMul1) * c.c2;
    return {static_cast<std::uint32_t>(p1 >> 32) ^ c.c1 ^ k0,
            static_cast<std::uint32_t>(p1),
            static_cast<std::uint32_t>(p0 >> 32) ^ c.c3 ^ k1,
            static_cast<std::uint32_t>(p0)};
}

inline Block philox_rounds(Block c, std::uint32_t k0, std::uint32_t k1)
{
    for (int round = 0; round < 10; ++round)
    {
        if (round > 0)
        {
            k0 += kWeyl0;
            k1 += kWeyl1;
        }
        c = philox_round(c, k0, k1);
    }
    return c;
}
}  // namespace

std::array<std::uint32_t, 4>
philox4x32(std::array<std::uint32_t, 4> ctr, std::array<std::uint32_t, 2> key)
{
    Block out = philox_rounds({ctr[0], ctr[1], ctr[2], ctr[3]}, key[0], key[1]);
    return {out.c0, out.c1, out.c2, out.c3};
}

std::uint64_t RngStream::next_u64()
{
    std::uint64_t block = counter_ >> 1;
    if (block != cached_block_)
    {
        Block out = philox_rounds({static_cast<std::uint32_t>(block),
                                   static_cast<std::uint32_t>(block >> 32),
                                   static_cast<std::uint32_t>(stream_id_),
                                   static_cast<std::uint32_t>(stream_id_ >> 32)},
                                  static_cast<std::uint32_t>(seed_),
                                  static_cast<std::uint32_t>(seed_ >> 32));
        cache_[0] = (static_cast<std::uint64_t>(out.c1) << 32) | out.c0;
        cache_[1] = (static_cast<std::uint64_t>(out.c3) << 32) | out.c2;
        cached_block_ = block;
    }
    return cache_[counter_++ & 1];
}

}  // namespace rde::sampling
