// Copyright 2026 The hgpsim Authors
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

#ifndef HGPSIM_RNG_H
#define HGPSIM_RNG_H

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace hgpsim {

/// std::mt19937_64's output sequence is fixed by the standard, so every
/// draw below is reproducible across standard libraries.
using Rng = std::mt19937_64;

/// SplitMix64 finalizer.
constexpr uint64_t mix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Stable combination of a seed with a stream index.
constexpr uint64_t derive_seed(uint64_t seed, uint64_t index) {
    return mix64(mix64(seed) ^ (index * 0xD1B54A32D192ED03ULL + 0x8CB92BA72F3D8DD7ULL));
}

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform01(Rng &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform integer in [0, bound) via rejection; bound > 0.
uint64_t uniform_below(Rng &rng, uint64_t bound);

/// Fisher-Yates shuffle driven by uniform_below.
template <typename T>
void shuffle(std::vector<T> &items, Rng &rng) {
    for (size_t k = items.size(); k > 1; k--) {
        size_t j = static_cast<size_t>(uniform_below(rng, k));
        std::swap(items[k - 1], items[j]);
    }
}

/// Indices in [0, n) each included independently with probability p, ascending.
/// Uses geometric gaps so the cost scales with the number of hits.
std::vector<size_t> sample_bernoulli_positions(Rng &rng, size_t n, double p);

}  // namespace hgpsim

#endif
