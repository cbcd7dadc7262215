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

#include "schurtrace/sampling.h"

#include <gtest/gtest.h>

#include <map>

#include "oracles.h"
#include "schurtrace/exact_dist.h"

using namespace schurtrace;

namespace {

double empirical_l1(const ExactDistribution &exact, const std::map<Partition, int> &counts, int draws) {
    double l1 = 0;
    for (const auto &[lambda, p] : exact.entries()) {
        auto it = counts.find(lambda);
        double freq = it == counts.end() ? 0.0 : static_cast<double>(it->second) / draws;
        l1 += std::abs(freq - to_double(p));
    }
    for (const auto &[lambda, c] : counts) {
        if (exact.probability(lambda) == 0) {
            l1 += static_cast<double>(c) / draws;
        }
    }
    return l1;
}

double sampler_l1(const ExactSpectrum &alpha, int n, SwMethod method, int draws, std::uint64_t seed) {
    SchurWeylSampler sampler(alpha.to_double(), method);
    RngStream rng(seed, 0);
    std::map<Partition, int> counts;
    for (int i = 0; i < draws; ++i) {
        ++counts[sampler.draw(n, rng)];
    }
    return empirical_l1(sw_exact(alpha, n), counts, draws);
}

}  // namespace

TEST(rs_shape, small_words) {
    EXPECT_EQ(rs_shape(std::vector<int>{3, 1, 2}), Partition({2, 1}));
    EXPECT_EQ(rs_shape(std::vector<int>{1, 1, 1}), Partition({3}));
    EXPECT_EQ(rs_shape(std::vector<int>{3, 2, 1}), Partition({1, 1, 1}));
    EXPECT_EQ(rs_shape(std::vector<int>{2, 1, 1, 2}), Partition({3, 1}));
    EXPECT_THROW(rs_shape(std::vector<int>{}), std::invalid_argument);
    EXPECT_THROW(rs_shape(std::vector<int>{1, 0}), std::invalid_argument);
}

TEST(rs_shape, matches_textbook_insertion_and_greene) {
    RngStream rng(11, 0);
    for (int trial = 0; trial < 3000; ++trial) {
        int len = 1 + static_cast<int>(rng.uniform_below(14));
        int alphabet = 1 + static_cast<int>(rng.uniform_below(trial % 2 ? 5 : 80));
        std::vector<int> w;
        for (int i = 0; i < len; ++i) {
            w.push_back(1 + static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(alphabet))));
        }
        Partition shape = rs_shape(w);
        ASSERT_EQ(shape, Partition(oracle::insertion_shape(w)));
        ASSERT_EQ(shape.row(0), oracle::longest_weakly_increasing(w));
        ASSERT_EQ(shape.length(), oracle::longest_strictly_decreasing(w));
    }
}

TEST(sw_sampler, rank_one_is_a_single_row) {
    SchurWeylSampler s(Spectrum({1.0, 0.0, 0.0}));
    RngStream rng(1, 0);
    EXPECT_EQ(s.draw(17, rng), Partition({17}));
    EXPECT_EQ(s.dimension(), 3);
}

TEST(sw_sampler, method_selection) {
    SchurWeylSampler distinct(Spectrum({0.5, 0.3, 0.2}));
    EXPECT_EQ(distinct.method_for(1000000), SwMethod::ChamberRejection);
    SchurWeylSampler tied(Spectrum::uniform(4));
    EXPECT_EQ(tied.method_for(1000000), SwMethod::Rsk);
    EXPECT_THROW(SchurWeylSampler(Spectrum::uniform(3), SwMethod::ChamberRejection), std::invalid_argument);
    EXPECT_THROW(SchurWeylSampler(Spectrum::zipf(8, 1.0), SwMethod::ChamberRejection), std::invalid_argument);
}

TEST(sw_sampler, rsk_matches_exact_table) {
    ExactSpectrum a({Rational(1, 2), Rational(3, 10), Rational(1, 5)});
    EXPECT_LE(sampler_l1(a, 6, SwMethod::Rsk, 200000, 1), 0.02);
    EXPECT_LE(sampler_l1(ExactSpectrum::uniform(3), 6, SwMethod::Rsk, 200000, 2), 0.02);
    EXPECT_LE(sampler_l1(ExactSpectrum::uniform(2, 5), 7, SwMethod::Rsk, 100000, 3), 0.02);
}

TEST(sw_sampler, chamber_matches_exact_table) {
    ExactSpectrum a({Rational(1, 2), Rational(3, 10), Rational(1, 5)});
    EXPECT_LE(sampler_l1(a, 6, SwMethod::ChamberRejection, 100000, 1), 0.02);
    // Acceptance scales with the Vandermonde product (about 1e-3 here), so few draws.
    ExactSpectrum b({Rational(7, 10), Rational(1, 5), Rational(2, 25), Rational(1, 50)});
    EXPECT_LE(sampler_l1(b, 4, SwMethod::ChamberRejection, 2000, 4), 0.08);
    ExactSpectrum c({Rational(3, 5), Rational(2, 5), Rational(0)});
    EXPECT_LE(sampler_l1(c, 9, SwMethod::ChamberRejection, 100000, 5), 0.02);
}

TEST(sw_sampler, methods_agree_on_large_n_moments) {
    // Row means at n = 2000 from both exact samplers must agree within noise.
    SchurWeylSampler rsk(Spectrum({0.5, 0.3, 0.2}), SwMethod::Rsk);
    SchurWeylSampler cham(Spectrum({0.5, 0.3, 0.2}), SwMethod::ChamberRejection);
    RngStream r1(7, 0);
    RngStream r2(7, 1);
    const int draws = 2000;
    std::vector<double> m1(3, 0), m2(3, 0);
    for (int i = 0; i < draws; ++i) {
        auto a = rsk.draw(2000, r1);
        auto b = cham.draw(2000, r2);
        for (int j = 0; j < 3; ++j) {
            m1[j] += a.row(j) / double(draws);
            m2[j] += b.row(j) / double(draws);
        }
    }
    for (int j = 0; j < 3; ++j) {
        // Row standard deviation is about sqrt(2000 * 0.25) = 22; 6 sigma on the difference of means.
        EXPECT_NEAR(m1[j], m2[j], 6 * 22 * std::sqrt(2.0 / draws)) << "row " << j;
    }
}

TEST(sw_sampler, deterministic_given_stream) {
    SchurWeylSampler s(Spectrum({0.5, 0.3, 0.2}));
    RngStream a(3, 9);
    RngStream b(3, 9);
    for (int i = 0; i < 50; ++i) {
        ASSERT_EQ(s.draw(40, a), s.draw(40, b));
    }
}

TEST(planch_sampler, matches_exact_table) {
    RngStream rng(8, 0);
    std::map<Partition, int> counts;
    const int draws = 100000;
    for (int i = 0; i < draws; ++i) {
        ++counts[sample_planch(5, rng)];
    }
    EXPECT_LE(empirical_l1(planch_exact(5), counts, draws), 0.02);
}
