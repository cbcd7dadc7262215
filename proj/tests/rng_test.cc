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

#include "schurtrace/rng.h"

#include <gtest/gtest.h>

using namespace schurtrace;

TEST(rng, deterministic) {
    RngStream a(5, 3);
    RngStream b(5, 3);
    for (int i = 0; i < 100; ++i) {
        ASSERT_EQ(a.next_u64(), b.next_u64());
    }
}

TEST(rng, streams_differ) {
    RngStream a(5, 0);
    RngStream b(5, 1);
    RngStream c(6, 0);
    int same_ab = 0;
    int same_ac = 0;
    for (int i = 0; i < 100; ++i) {
        auto x = a.next_u64();
        same_ab += x == b.next_u64();
        same_ac += x == c.next_u64();
    }
    EXPECT_EQ(same_ab, 0);
    EXPECT_EQ(same_ac, 0);
}

TEST(rng, substream_leaves_parent_alone) {
    RngStream a(9, 2);
    RngStream b(9, 2);
    RngStream child = a.substream(4);
    EXPECT_EQ(a.next_u64(), b.next_u64());
    EXPECT_EQ(child.next_u64(), RngStream(9, 2).substream(4).next_u64());
    EXPECT_NE(RngStream(9, 2).substream(4).next_u64(), RngStream(9, 2).substream(5).next_u64());
}

TEST(rng, uniform_below_is_in_range_and_balanced) {
    RngStream rng(1, 0);
    std::vector<int> counts(7, 0);
    const int draws = 70000;
    for (int i = 0; i < draws; ++i) {
        auto v = rng.uniform_below(7);
        ASSERT_LT(v, 7u);
        ++counts[v];
    }
    double chi2 = 0;
    for (int c : counts) {
        double e = draws / 7.0;
        chi2 += (c - e) * (c - e) / e;
    }
    // 6 degrees of freedom; 22.46 is the 0.999 quantile.
    EXPECT_LT(chi2, 22.46);
    EXPECT_EQ(rng.uniform_below(1), 0u);
}

TEST(rng, uniform01_range) {
    RngStream rng(2, 0);
    double sum = 0;
    for (int i = 0; i < 100000; ++i) {
        double u = rng.uniform01();
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
        sum += u;
    }
    EXPECT_NEAR(sum / 100000, 0.5, 0.005);
}
