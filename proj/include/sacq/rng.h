// Copyright 2026 The sacq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SACQ_RNG_H
#define SACQ_RNG_H

#include <cstdint>
#include <random>

namespace sacq {

/// Every sampled quantity in the project comes from this generator. The C++
/// standard fixes its output sequence, so a seed reproduces the same draws on
/// every conforming platform. Distributions are derived by hand below because
/// the std::*_distribution adaptors are implementation-defined.
using Prng = std::mt19937_64;
inline constexpr const char *kPrngName = "mt19937_64";
inline constexpr const char *kSeedSplitName = "splitmix64(master + (stream+1)*0x9e3779b97f4a7c15)";

/// SplitMix64 finalizer.
constexpr std::uint64_t splitmix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Seed of independent stream `stream` derived from a master seed. Streams are
/// assigned by direction index, so results do not depend on scheduling.
constexpr std::uint64_t split_seed(std::uint64_t master, std::uint64_t stream) {
    return splitmix64(master + (stream + 1) * 0x9e3779b97f4a7c15ULL);
}

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform01(Prng &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform integer in [0, 2^bits), 0 <= bits <= 32.
inline std::uint32_t uniform_bits(Prng &rng, int bits) {
    if (bits == 0) {
        return 0;
    }
    return static_cast<std::uint32_t>(rng() >> (64 - bits));
}

}  // namespace sacq

#endif
