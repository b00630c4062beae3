#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <utility>

namespace omtlab {

// Philox4x64-10 keyed counter-based generator (Salmon et al.). One block
// of the keyed permutation yields four 64-bit words; the key carries
// (seed, stream_id), the counter carries the block index. Distinct
// stream ids give statistically independent streams, so stream_id =
// path index makes path generation embarrassingly parallel and
// bit-reproducible regardless of scheduling.
inline std::array<std::uint64_t, 4> philox4x64_10(std::array<std::uint64_t, 4> ctr,
                                                  std::array<std::uint64_t, 2> key) {
    constexpr std::uint64_t kMul0 = 0xD2E7470EE14C6C93ULL;
    constexpr std::uint64_t kMul1 = 0xCA5A826395121157ULL;
    constexpr std::uint64_t kWeyl0 = 0x9E3779B97F4A7C15ULL;
    constexpr std::uint64_t kWeyl1 = 0xBB67AE8584CAA73BULL;
    for (int round = 0; round < 10; ++round) {
        const unsigned __int128 p0 = static_cast<unsigned __int128>(kMul0) * ctr[0];
        const unsigned __int128 p1 = static_cast<unsigned __int128>(kMul1) * ctr[2];
        const std::uint64_t hi0 = static_cast<std::uint64_t>(p0 >> 64);
        const std::uint64_t lo0 = static_cast<std::uint64_t>(p0);
        const std::uint64_t hi1 = static_cast<std::uint64_t>(p1 >> 64);
        const std::uint64_t lo1 = static_cast<std::uint64_t>(p1);
        ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
        key[0] += kWeyl0;
        key[1] += kWeyl1;
    }
    return ctr;
}

// One reproducible stream of randomness. (seed, stream_id) fully
// determines every output.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream_id)
        : key_{seed, stream_id}, block_(0), pos_(4) {}

    std::uint64_t seed() const { return key_[0]; }
    std::uint64_t stream_id() const { return key_[1]; }

    std::uint64_t next_u64() {
        if (pos_ == 4) {
            buf_ = philox4x64_10({block_++, 0, 0, 0}, key_);
            pos_ = 0;
        }
        return buf_[pos_++];
    }

    // Uniform on (0, 1]; never 0, so it is safe under log().
    double next_uniform_pos() {
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1p-53;
    }

    // Uniform on [0, 1).
    double next_uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1p-53;
    }

    // Box-Muller pair of independent standard normals. Exact-distribution
    // (no central-limit shortcuts).
    std::pair<double, double> next_gaussian_pair() {
        const double u1 = next_uniform_pos();
        const double u2 = next_uniform();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * M_PI * u2;
        return {radius * std::cos(angle), radius * std::sin(angle)};
    }

private:
    std::array<std::uint64_t, 2> key_;
    std::uint64_t block_;
    std::array<std::uint64_t, 4> buf_{};
    int pos_;
};

}  // namespace omtlab
