#pragma once

// Philox4x32-10 counter-based generator. A draw is addressed by
// (key, counter) alone, so independent consumers can pull the same stream
// without sharing mutable state.

#include <cmath>
#include <cstdint>

namespace chemoflow {

struct Philox4x32 {
    uint32_t x[4];
};

namespace detail {

inline void philox_round(uint32_t ctr[4], const uint32_t key[2]) {
    const uint64_t m0 = 0xD2511F53ull * ctr[0];
    const uint64_t m1 = 0xCD9E8D57ull * ctr[2];
    const uint32_t hi0 = static_cast<uint32_t>(m0 >> 32), lo0 = static_cast<uint32_t>(m0);
    const uint32_t hi1 = static_cast<uint32_t>(m1 >> 32), lo1 = static_cast<uint32_t>(m1);
    ctr[0] = hi1 ^ ctr[1] ^ key[0];
    ctr[1] = lo1;
    ctr[2] = hi0 ^ ctr[3] ^ key[1];
    ctr[3] = lo0;
}

}  // namespace detail

inline Philox4x32 philox4x32(uint64_t key64, uint64_t c01, uint64_t c23) {
    uint32_t key[2] = {static_cast<uint32_t>(key64), static_cast<uint32_t>(key64 >> 32)};
    Philox4x32 out;
    out.x[0] = static_cast<uint32_t>(c01);
    out.x[1] = static_cast<uint32_t>(c01 >> 32);
    out.x[2] = static_cast<uint32_t>(c23);
    out.x[3] = static_cast<uint32_t>(c23 >> 32);
    for (int round = 0; round < 10; ++round) {
        detail::philox_round(out.x, key);
        key[0] += 0x9E3779B9u;
        key[1] += 0xBB67AE85u;
    }
    return out;
}

// One standard normal per counter via Box-Muller on the first two words.
inline double philox_normal(uint64_t key, uint64_t c01, uint64_t c23) {
    const Philox4x32 r = philox4x32(key, c01, c23);
    const double u1 = (static_cast<double>(r.x[0]) + 0.5) * 0x1p-32;
    const double u2 = (static_cast<double>(r.x[1]) + 0.5) * 0x1p-32;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
}

}  // namespace chemoflow
