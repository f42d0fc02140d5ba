#pragma once

#include <array>
#include <cstdint>

namespace riscci::mc {

/// Philox4x32-10 counter-based generator block function.
/// Stateless: output is a pure function of (counter, key), which is what
/// makes per-trial streams reproducible under any parallel chunking.
struct Philox4x32 {
    static constexpr uint32_t kM0 = 0xD2511F53u;
    static constexpr uint32_t kM1 = 0xCD9E8D57u;
    static constexpr uint32_t kW0 = 0x9E3779B9u;
    static constexpr uint32_t kW1 = 0xBB67AE85u;

    static std::array<uint32_t, 4> block(std::array<uint32_t, 4> ctr,
                                         std::array<uint32_t, 2> key) {
        for (int round = 0; round < 10; ++round) {
            const uint64_t p0 = static_cast<uint64_t>(kM0) * ctr[0];
            const uint64_t p1 = static_cast<uint64_t>(kM1) * ctr[2];
            const uint32_t hi0 = static_cast<uint32_t>(p0 >> 32);
            const uint32_t lo0 = static_cast<uint32_t>(p0);
            const uint32_t hi1 = static_cast<uint32_t>(p1 >> 32);
            const uint32_t lo1 = static_cast<uint32_t>(p1);
            ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
            key[0] += kW0;
            key[1] += kW1;
        }
        return ctr;
    }
};

/// Uniform draws for one Monte Carlo trial: a fixed (seed, stream, trial)
/// coordinate system over Philox blocks. Index q of u64 lane -> block q/2.
class TrialStream {
public:
    TrialStream(uint64_t seed, uint32_t stream, uint64_t trial)
        : key_{static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32)},
          base_{static_cast<uint32_t>(trial), static_cast<uint32_t>(trial >> 32), 0u, stream} {}

    uint64_t bits(uint32_t q) const {
        auto ctr = base_;
        ctr[2] = q >> 1;
        auto out = Philox4x32::block(ctr, key_);
        const int off = (q & 1u) ? 2 : 0;
        return static_cast<uint64_t>(out[off]) | (static_cast<uint64_t>(out[off + 1]) << 32);
    }

    /// Uniform on (0,1), never exactly 0 or 1.
    double uniform(uint32_t q) const {
        return (static_cast<double>(bits(q) >> 11) + 0.5) * 0x1.0p-53;
    }

private:
    std::array<uint32_t, 2> key_;
    std::array<uint32_t, 4> base_;
};

} // namespace riscci::mc
