#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace levyfp {

/// Philox4x32-10 counter-based generator. Each (key, stream) pair yields an
/// independent sequence addressed by a 64-bit block counter, so draws are
/// reproducible independent of evaluation order across threads.
class Philox4x32 {
public:
    Philox4x32(std::uint64_t key, std::uint64_t stream)
        : key0_(static_cast<std::uint32_t>(key)),
          key1_(static_cast<std::uint32_t>(key >> 32)),
          stream_lo_(static_cast<std::uint32_t>(stream)),
          stream_hi_(static_cast<std::uint32_t>(stream >> 32)) {}

    std::uint32_t next_u32() {
        if (pos_ == 4) {
            fill_block();
            pos_ = 0;
        }
        return buf_[pos_++];
    }

    std::uint64_t next_u64() {
        const std::uint64_t lo = next_u32();
        const std::uint64_t hi = next_u32();
        return (hi << 32) | lo;
    }

    /// Uniform in the open interval (0, 1).
    double uniform() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

private:
    static constexpr std::uint32_t kMul0 = 0xD2511F53u;
    static constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
    static constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
    static constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

    void fill_block() {
        std::uint32_t c0 = static_cast<std::uint32_t>(block_);
        std::uint32_t c1 = static_cast<std::uint32_t>(block_ >> 32);
        std::uint32_t c2 = stream_lo_;
        std::uint32_t c3 = stream_hi_;
        std::uint32_t k0 = key0_, k1 = key1_;
        for (int round = 0; round < 10; ++round) {
            const std::uint64_t p0 = static_cast<std::uint64_t>(kMul0) * c0;
            const std::uint64_t p1 = static_cast<std::uint64_t>(kMul1) * c2;
            const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
            const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
            const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
            const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
            c0 = hi1 ^ c1 ^ k0;
            c1 = lo1;
            c2 = hi0 ^ c3 ^ k1;
            c3 = lo0;
            k0 += kWeyl0;
            k1 += kWeyl1;
        }
        buf_ = {c0, c1, c2, c3};
        ++block_;
    }

    std::uint32_t key0_, key1_, stream_lo_, stream_hi_;
    std::uint64_t block_ = 0;
    std::array<std::uint32_t, 4> buf_{};
    int pos_ = 4;
};

/// Per-path random stream keyed by (seed, stream index). The antithetic flag
/// couples a path to its sibling by negating normals and using 1-U for
/// exponential and uniform draws.
class PathRng {
public:
    PathRng(std::uint64_t seed, std::uint64_t stream, bool antithetic = false)
        : gen_(seed, stream), antithetic_(antithetic) {}

    double uniform() {
        const double u = gen_.uniform();
        return antithetic_ ? 1.0 - u : u;
    }

    double normal() {
        if (have_cached_) {
            have_cached_ = false;
            return antithetic_ ? -cached_ : cached_;
        }
        const double u1 = gen_.uniform();
        const double u2 = gen_.uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * M_PI * u2;
        cached_ = r * std::sin(theta);
        have_cached_ = true;
        const double z = r * std::cos(theta);
        return antithetic_ ? -z : z;
    }

    double exponential(double rate) { return -std::log(uniform()) / rate; }

private:
    Philox4x32 gen_;
    bool antithetic_;
    bool have_cached_ = false;
    double cached_ = 0.0;
};

} // namespace levyfp
