// Copyright 2026 The schurtrace Authors
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

#include "schurtrace/spectrum_estimation.h"

#include <gtest/gtest.h>

using namespace schurtrace;

TEST(batch_plan, formulas) {
    // n = ceil(4c/eps^2), k = ceil(72 ln(2/delta)) made odd.
    auto p = spectrum_batch_plan(0.1, 0.05, 1.0);
    EXPECT_EQ(p.n_per_batch, 400);
    EXPECT_EQ(p.k_batches, 267);
    auto q = spectrum_batch_plan(0.1, 0.05, 2.0);
    EXPECT_EQ(q.n_per_batch, 800);
    EXPECT_EQ(q.k_batches % 2, 1);
    EXPECT_THROW(spectrum_batch_plan(0, 0.1, 2), std::invalid_argument);
    EXPECT_THROW(spectrum_batch_plan(0.1, 1, 2), std::invalid_argument);
    EXPECT_THROW(spectrum_batch_plan(0.1, 0.1, -1), std::invalid_argument);
}

TEST(median, odd_only) {
    EXPECT_EQ(median({3, 1, 2}), 2);
    EXPECT_EQ(median({5}), 5);
    EXPECT_EQ(median({0.4, 0.1, 0.9, 0.2, 0.3}), 0.3);
    EXPECT_THROW(median({1, 2}), std::invalid_argument);
    EXPECT_THROW(median({}), std::invalid_argument);
}

TEST(spectrum_estimate, rank_one_is_exact) {
    SchurWeylSampler s(Spectrum({1.0, 0.0}));
    auto est = spectrum_estimate(s, 0.2, 0.1, 2.0, RngStream(1, 0));
    EXPECT_EQ(est.values, (std::vector<double>{1.0, 0.0}));
    EXPECT_EQ(est.total_samples, est.n_per_batch * est.k_batches);
}

TEST(spectrum_estimate, deterministic_and_thread_invariant) {
    SchurWeylSampler s(Spectrum::uniform(3, 4));
    auto a = spectrum_estimate(s, 0.2, 0.1, 2.0, RngStream(4, 2));
    auto b = spectrum_estimate(s, 0.2, 0.1, 2.0, RngStream(4, 2), 3);
    EXPECT_EQ(a.values, b.values);
    EXPECT_EQ(a.seed, 4u);
    EXPECT_EQ(a.stream_id, 2u);
    ASSERT_EQ(a.values.size(), 4u);
    EXPECT_EQ(a.values[3], 0.0);
}

TEST(spectrum_estimate, entries_within_eps) {
    SchurWeylSampler s(Spectrum({0.5, 0.3, 0.2}));
    int failures = 0;
    for (int run = 0; run < 40; ++run) {
        auto est = spectrum_estimate(s, 0.1, 0.05, 2.0, RngStream(12, static_cast<std::uint64_t>(run)));
        failures += std::abs(est.values[0] - 0.5) > 0.1;
        failures += std::abs(est.values[1] - 0.3) > 0.1;
        failures += std::abs(est.values[2] - 0.2) > 0.1;
    }
    EXPECT_EQ(failures, 0);
}
