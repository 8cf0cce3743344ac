#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

namespace entbounds {

/**
 * Counter-based PRNG (Philox 4x32-10, Salmon et al., SC 2011).
 *
 * A (key, stream) pair names an independent sequence, so sample k of a
 * Monte-Carlo sweep can be drawn on any worker, in any order, and still
 * reproduce bit-for-bit. No state is shared between instances.
 */
class CounterRng {
public:
    explicit CounterRng(std::uint64_t key, std::uint64_t stream = 0)
        : key_lo_(static_cast<std::uint32_t>(key)),
          key_hi_(static_cast<std::uint32_t>(key >> 32)),
          stream_lo_(static_cast<std::uint32_t>(stream)),
          stream_hi_(static_cast<std::uint32_t>(stream >> 32)) {}

    std::uint32_t next_u32() {
        if (block_pos_ == 4) {
            fill_block();
            block_pos_ = 0;
        }
        return block_[block_pos_++];
    }

    std::uint64_t next_u64() {
        const std::uint64_t lo = next_u32();
        const std::uint64_t hi = next_u32();
        return lo | (hi << 32);
    }

    /// Uniform double in [0, 1) with 53-bit resolution.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Standard normal deviate (Box-Muller; consumes two uniforms per pair).
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log1p(-u1));  // log(1-u1) stays finite
        const double angle = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(angle);
        have_spare_ = true;
        return r * std::cos(angle);
    }

    /// Standard complex normal: independent N(0,1) real and imaginary parts.
    std::complex<double> complex_gaussian() {
        const double re = gaussian();
        const double im = gaussian();
        return {re, im};
    }

private:
    void fill_block() {
        std::uint32_t x0 = block_lo_, x1 = block_hi_, x2 = stream_lo_, x3 = stream_hi_;
        std::uint32_t k0 = key_lo_, k1 = key_hi_;
        for (int round = 0; round < 10; ++round) {
            const std::uint64_t p0 = 0xD2511F53ull * x0;
            const std::uint64_t p1 = 0xCD9E8D57ull * x2;
            const std::uint32_t y0 = static_cast<std::uint32_t>(p1 >> 32) ^ x1 ^ k0;
            const std::uint32_t y1 = static_cast<std::uint32_t>(p1);
            const std::uint32_t y2 = static_cast<std::uint32_t>(p0 >> 32) ^ x3 ^ k1;
            const std::uint32_t y3 = static_cast<std::uint32_t>(p0);
            x0 = y0;
            x1 = y1;
            x2 = y2;
            x3 = y3;
            k0 += 0x9E3779B9u;
            k1 += 0xBB67AE85u;
        }
        block_[0] = x0;
        block_[1] = x1;
        block_[2] = x2;
        block_[3] = x3;
        if (++block_lo_ == 0) ++block_hi_;
    }

    std::uint32_t key_lo_, key_hi_;
    std::uint32_t stream_lo_, stream_hi_;
    std::uint32_t block_lo_ = 0, block_hi_ = 0;  // 64-bit block counter
    std::uint32_t block_[4] = {};
    int block_pos_ = 4;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace entbounds
