#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace staircase {

// Philox 4x32-10 counter-based generator. A fixed (key, counter) pair always
// produces the same block, so per-frame streams keyed by (seed, point, frame)
// are reproducible regardless of scheduling.
class Philox4x32 {
  public:
    Philox4x32(uint64_t key_lo, uint64_t key_hi_and_ctr = 0) {
        key_[0] = uint32_t(key_lo);
        key_[1] = uint32_t(key_lo >> 32);
        ctr_ = {uint32_t(key_hi_and_ctr), uint32_t(key_hi_and_ctr >> 32), 0, 0};
    }

    static std::array<uint32_t, 4> block(std::array<uint32_t, 4> ctr,
                                         std::array<uint32_t, 2> key) {
        for (int round = 0; round < 10; ++round) {
            ctr = single_round(ctr, key);
            key[0] += 0x9E3779B9u; // golden-ratio Weyl constants
            key[1] += 0xBB67AE85u;
        }
        return ctr;
    }

    uint32_t next_u32() {
        if (have_ == 0) {
            buf_ = block(ctr_, key_);
            have_ = 4;
            if (++ctr_[2] == 0)
                ++ctr_[3];
        }
        return buf_[4 - have_--];
    }

    uint64_t next_u64() {
        uint64_t lo = next_u32();
        return lo | (uint64_t(next_u32()) << 32);
    }

    // Uniform double in (0, 1]; never 0, so it is safe under log().
    double next_unit() { return (next_u64() >> 11) * 0x1.0p-53 + 0x1.0p-54; }

    // Number of failures before the next success for success probability p.
    int64_t next_geometric(double log1m_p) {
        return int64_t(std::log(next_unit()) / log1m_p);
    }

  private:
    static std::array<uint32_t, 4> single_round(const std::array<uint32_t, 4>& x,
                                                const std::array<uint32_t, 2>& k) {
        uint64_t p0 = uint64_t(0xD2511F53u) * x[0];
        uint64_t p1 = uint64_t(0xCD9E8D57u) * x[2];
        return {uint32_t(p1 >> 32) ^ x[1] ^ k[0], uint32_t(p1),
                uint32_t(p0 >> 32) ^ x[3] ^ k[1], uint32_t(p0)};
    }

    std::array<uint32_t, 2> key_;
    std::array<uint32_t, 4> ctr_;
    std::array<uint32_t, 4> buf_{};
    int have_ = 0;
};

// Stream derivation for the simulator: the seed is the key and the 64-bit
// counter prefix encodes (point, frame, stream), so every stream is disjoint
// and reproducible regardless of scheduling. frame must stay below 2^42.
inline Philox4x32 make_stream(uint64_t base_seed, uint32_t point, uint64_t frame,
                              uint32_t stream) {
    uint64_t prefix = (uint64_t(point) << 44) | (frame << 2) | (stream & 3u);
    return Philox4x32(base_seed, prefix);
}

} // namespace staircase
