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

#include "hgpsim/rng.h"

#include <cmath>

namespace hgpsim {

uint64_t uniform_below(Rng &rng, uint64_t bound) {
    uint64_t limit = ~uint64_t{0} - (~uint64_t{0} % bound);
    while (true) {
        uint64_t x = rng();
        if (x < limit) {
            return x % bound;
        }
    }
}

std::vector<size_t> sample_bernoulli_positions(Rng &rng, size_t n, double p) {
    std::vector<size_t> out;
    if (p <= 0 || n == 0) {
        return out;
    }
    if (p >= 1) {
        out.resize(n);
        for (size_t k = 0; k < n; k++) {
            out[k] = k;
        }
        return out;
    }
    double log_q = std::log1p(-p);
    double pos = -1;
    while (true) {
        // 1 - u lies in (0, 1], keeping the log finite.
        double u = 1.0 - uniform01(rng);
        pos += std::floor(std::log(u) / log_q) + 1;
        if (pos >= static_cast<double>(n)) {
            return out;
        }
        out.push_back(static_cast<size_t>(pos));
    }
}

}  // namespace hgpsim
