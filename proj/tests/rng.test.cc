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
#include <set>

#include "gtest/gtest.h"

using namespace hgpsim;

TEST(rng, derive_seed_spreads) {
    std::set<uint64_t> seen;
    for (uint64_t i = 0; i < 10000; i++) {
        seen.insert(derive_seed(42, i));
    }
    ASSERT_EQ(seen.size(), 10000u);
    ASSERT_NE(derive_seed(1, 0), derive_seed(0, 1));
}

TEST(rng, uniform_below_in_range) {
    Rng rng(3);
    std::vector<size_t> counts(7, 0);
    for (int i = 0; i < 70000; i++) {
        uint64_t v = uniform_below(rng, 7);
        ASSERT_LT(v, 7u);
        counts[v]++;
    }
    for (size_t c : counts) {
        ASSERT_NEAR(static_cast<double>(c), 10000.0, 500.0);
    }
}

TEST(rng, bernoulli_positions) {
    Rng rng(5);
    ASSERT_TRUE(sample_bernoulli_positions(rng, 1000, 0.0).empty());
    ASSERT_EQ(sample_bernoulli_positions(rng, 100, 1.0).size(), 100u);

    size_t n = 1000;
    double p = 0.01;
    size_t total = 0;
    size_t reps = 2000;
    std::vector<size_t> hits(n, 0);
    for (size_t r = 0; r < reps; r++) {
        auto pos = sample_bernoulli_positions(rng, n, p);
        for (size_t k = 1; k < pos.size(); k++) {
            ASSERT_LT(pos[k - 1], pos[k]);
        }
        for (size_t q : pos) {
            ASSERT_LT(q, n);
            hits[q]++;
        }
        total += pos.size();
    }
    double mean = static_cast<double>(total) / static_cast<double>(reps);
    double sd = std::sqrt(n * p * (1 - p) / static_cast<double>(reps));
    ASSERT_NEAR(mean, n * p, 5 * sd);
    // First and last positions are hit as often as any other.
    ASSERT_NEAR(static_cast<double>(hits.front()), reps * p, 5 * std::sqrt(reps * p));
    ASSERT_NEAR(static_cast<double>(hits.back()), reps * p, 5 * std::sqrt(reps * p));
}

TEST(rng, shuffle_is_permutation) {
    Rng rng(1);
    std::vector<int> v{0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
    shuffle(v, rng);
    std::set<int> s(v.begin(), v.end());
    ASSERT_EQ(s.size(), 10u);
}
