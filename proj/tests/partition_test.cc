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

#include "schurtrace/partition.h"

#include <gtest/gtest.h>

#include <functional>
#include <map>

using namespace schurtrace;

namespace {

// Partitions of n into parts of size at most k.
long long count_partitions(int n, int k, std::map<std::pair<int, int>, long long> &memo) {
    if (n == 0) {
        return 1;
    }
    if (k == 0) {
        return 0;
    }
    auto key = std::make_pair(n, k);
    if (auto it = memo.find(key); it != memo.end()) {
        return it->second;
    }
    long long total = count_partitions(n, k - 1, memo);
    if (k <= n) {
        total += count_partitions(n - k, k, memo);
    }
    return memo[key] = total;
}

// Standard Young tableaux by removing the box holding n in every possible corner.
BigInt count_syt(std::vector<int> rows) {
    while (!rows.empty() && rows.back() == 0) {
        rows.pop_back();
    }
    if (rows.empty()) {
        return 1;
    }
    BigInt total = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        bool corner = i + 1 == rows.size() || rows[i + 1] < rows[i];
        if (corner) {
            auto smaller = rows;
            --smaller[i];
            total += count_syt(smaller);
        }
    }
    return total;
}

}  // namespace

TEST(partition, validates_rows) {
    EXPECT_THROW(Partition({2, 3}), std::invalid_argument);
    EXPECT_THROW(Partition({2, 0}), std::invalid_argument);
    EXPECT_THROW(Partition({-1}), std::invalid_argument);
    EXPECT_EQ(Partition::from_padded_rows({3, 1, 0, 0}), Partition({3, 1}));
    Partition p({4, 2, 1});
    EXPECT_EQ(p.size(), 7);
    EXPECT_EQ(p.length(), 3);
    EXPECT_EQ(p.row(5), 0);
}

TEST(partition, parse_round_trip) {
    Partition p = Partition::parse("4|2|1");
    EXPECT_EQ(p, Partition({4, 2, 1}));
    EXPECT_EQ(Partition::parse(p.str()), p);
    EXPECT_THROW(Partition::parse("1|2"), std::invalid_argument);
    EXPECT_THROW(Partition::parse("a"), std::invalid_argument);
}

TEST(partition, counts_match_independent_recursion) {
    std::map<std::pair<int, int>, long long> memo;
    for (int n = 1; n <= 40; ++n) {
        auto parts = enumerate_partitions(n);
        ASSERT_EQ(static_cast<long long>(parts.size()), count_partitions(n, n, memo)) << "n=" << n;
    }
    EXPECT_EQ(enumerate_partitions(40).size(), 37338u);
}

TEST(partition, descending_lex_order) {
    auto parts = enumerate_partitions(4);
    std::vector<Partition> expected{Partition({4}), Partition({3, 1}), Partition({2, 2}), Partition({2, 1, 1}),
                                    Partition({1, 1, 1, 1})};
    EXPECT_EQ(parts, expected);
    for (int n = 1; n <= 12; ++n) {
        auto all = enumerate_partitions(n);
        for (std::size_t i = 1; i < all.size(); ++i) {
            EXPECT_GT(all[i - 1], all[i]);
        }
    }
}

TEST(partition, max_rows_filter) {
    auto parts = enumerate_partitions(5, 2);
    std::vector<Partition> expected{Partition({5}), Partition({4, 1}), Partition({3, 2})};
    EXPECT_EQ(parts, expected);
}

TEST(partition, enumeration_limits) {
    EXPECT_THROW(enumerate_partitions(0), std::invalid_argument);
    EXPECT_THROW(enumerate_partitions(kMaxEnumerableBoxes + 1), std::length_error);
}

TEST(partition, hook_lengths) {
    // 6 4 2 1 / 3 1 / 1
    EXPECT_EQ(hook_lengths(Partition({4, 2, 1})), (std::vector<int>{6, 4, 2, 1, 3, 1, 1}));
    EXPECT_EQ(dim_sym(Partition({4, 2, 1})), 35);
    EXPECT_EQ(dim_sym(Partition({2, 1})), 2);
}

TEST(partition, hook_formula_matches_tableau_count) {
    for (int n = 1; n <= 8; ++n) {
        for (const auto &lambda : enumerate_partitions(n)) {
            EXPECT_EQ(dim_sym(lambda), count_syt(lambda.rows())) << lambda.str();
        }
    }
}

TEST(partition, sum_of_squares_is_factorial) {
    for (int n = 1; n <= 14; ++n) {
        BigInt total = 0;
        for (const auto &lambda : enumerate_partitions(n)) {
            BigInt f = dim_sym(lambda);
            total += f * f;
        }
        EXPECT_EQ(total, factorial(n)) << "n=" << n;
    }
}
