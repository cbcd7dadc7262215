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

#include <gtest/gtest.h>

#include "property_checks.h"

using namespace schurtrace;

TEST(inequalities, power_difference_lipschitz) {
    EXPECT_EQ(props::power_lipschitz(101, 100000), 0);
}

TEST(inequalities, concave_power_subadditive) {
    EXPECT_EQ(props::concave_power_subadditive(102, 100000), 0);
}

TEST(inequalities, power_mean) {
    EXPECT_EQ(props::power_mean(103, 100000), 0);
}

TEST(inequalities, truncation_tail) {
    EXPECT_EQ(props::truncation_tail(104, 10000), 0);
}

TEST(inequalities, truncation_tail_worst_case) {
    EXPECT_EQ(props::truncation_tail_worst_case(), 0);
    // Length m+1: the worst case spreads the mass evenly.
    EXPECT_NEAR(props::worst_tail(3, 4, 1.5, 4000), std::pow(0.25, 1.5), 1e-12);
}

TEST(inequalities, checks_detect_a_false_claim) {
    // Guard against a vacuous harness: a bound that is too tight must fail.
    RngStream rng(105, 0);
    int violations = 0;
    for (int i = 0; i < 1000; ++i) {
        double x = rng.uniform01(), y = rng.uniform01();
        violations += std::abs(x * x - y * y) > 1.0 * std::abs(x - y) + props::kSlack;
    }
    EXPECT_GT(violations, 0);
}
