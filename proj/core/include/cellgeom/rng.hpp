#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>

namespace cellgeom::rng {

/// Philox4x32-10 counter-based generator (Salmon et al., SC'11).
struct Philox4x32 {
    using Counter = std::array<std::uint32_t, 4>;
    using Key = std::array<std::uint32_t, 2>;

    static constexpr Counter block(Counter ctr, Key key) noexcept {
        for (int round = 0; round < 10; ++round) {
            if (round > 0) {
                key[0] += kWeyl0;
                key[1] += kWeyl1;
            }
            const std::uint64_t p0 = std::uint64_t{kMul0} * ctr[0];
            const std::uint64_t p1 = std::uint64_t{kMul1} * ctr[2];
            ctr = {static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0],
                   static_cast<std::uint32_t>(p1),
                   static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1],
                   static_cast<std::uint32_t>(p0)};
        }
        return ctr;
    }

    static constexpr Key key_from(std::uint64_t seed) noexcept {
        return {static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
    }

private:
    static constexpr std::uint32_t kMul0 = 0xD2511F53u;
    static constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
    static constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
    static constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;
};

/// Uniform in (0, 1] from the top 53 bits of a 64-bit word.
inline double to_unit(std::uint64_t bits) noexcept {
    return (static_cast<double>(bits >> 11) + 1.0) * 0x1.0p-53;
}

inline std::uint64_t join(std::uint32_t lo, std::uint32_t hi) noexcept {
    return (std::uint64_t{hi} << 32) | lo;
}

/// Address of an independent substream: (trial, entity, tag). Block index
/// runs in the first counter word.
struct StreamId {
    std::uint32_t trial = 0;
    std::uint32_t entity = 0;
    std::uint32_t tag = 0;
};

/// Sequential view of one substream. Satisfies UniformRandomBitGenerator with
/// 64-bit output, so it plugs into <random> distributions.
class Stream {
public:
    using result_type = std::uint64_t;

    Stream(std::uint64_t seed, StreamId id) noexcept : key_(Philox4x32::key_from(seed)), id_(id) {}

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

    result_type operator()() noexcept {
        if (lane_ == 2) refill();
        const result_type out = join(buffer_[2 * lane_], buffer_[2 * lane_ + 1]);
        ++lane_;
        return out;
    }

    double uniform() noexcept { return to_unit((*this)()); }
    double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }
    /// Unit-mean exponential.
    double exponential() noexcept { return -std::log(uniform()); }

private:
    void refill() noexcept {
        buffer_ = Philox4x32::block({block_++, id_.entity, id_.tag, id_.trial}, key_);
        lane_ = 0;
    }

    Philox4x32::Key key_;
    StreamId id_;
    std::uint32_t block_ = 0;
    Philox4x32::Counter buffer_{};
    int lane_ = 2;
};

/// One unit-mean exponential addressed directly by (index, entity, tag, trial).
inline double exponential_at(std::uint64_t seed, std::uint32_t trial, std::uint32_t tag,
                             std::uint32_t index, std::uint32_t entity) noexcept {
    const auto out = Philox4x32::block({index, entity, tag, trial}, Philox4x32::key_from(seed));
    return -std::log(to_unit(join(out[0], out[1])));
}

}  // namespace cellgeom::rng
