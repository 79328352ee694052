// SPDX-License-Identifier: Apache-2.0
//
// lifisim: link-level LiFi downlink simulation with randomly oriented receivers
// Copyright (C) 2026 lifisim contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstdint>

namespace lifi {

/// splitmix64 output function (Steele, Lea, Flood; Vigna's fixed-increment
/// variant). Used both as a sequential generator and, via explicit draw
/// indices, as a counter-based stream.
inline std::uint64_t splitmix64_mix(std::uint64_t z)
{
    z = (z ^ (z >> 30)) * UINT64_C(0xBF58476D1CE4E5B9);
    z = (z ^ (z >> 27)) * UINT64_C(0x94D049BB133111EB);
    return z ^ (z >> 31);
}

/// Sequential splitmix64 generator with caller-owned state.
class Splitmix64 {
public:
    explicit Splitmix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64()
    {
        state_ += UINT64_C(0x9E3779B97F4A7C15);
        return splitmix64_mix(state_);
    }

    /// Uniform double in [0, 1).
    double next_double()
    {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

private:
    std::uint64_t state_;
};

/// Counter-based draw: the k-th variate of the stream identified by `seed`.
/// Results depend only on (seed, k), so parallel consumers partitioned over k
/// produce identical streams regardless of scheduling.
inline std::uint64_t counter_u64(std::uint64_t seed, std::uint64_t k)
{
    return splitmix64_mix(seed + (k + 1) * UINT64_C(0x9E3779B97F4A7C15));
}

inline double counter_double(std::uint64_t seed, std::uint64_t k)
{
    return static_cast<double>(counter_u64(seed, k) >> 11) * 0x1.0p-53;
}

} // namespace lifi
