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

#include "schurtrace/power_trace.h"

#include <gtest/gtest.h>

#include <cmath>

using namespace schurtrace;

TEST(power_trace, truth) {
    std::vector<double> a{0.7, 0.2, 0.1};
    double direct = 0.7 * std::sqrt(0.7) + 0.2 * std::sqrt(0.2) + 0.1 * std::sqrt(0.1);
    EXPECT_NEAR(true_power_trace(a, 1.5), direct, 1e-15);
    EXPECT_NEAR(true_power_trace(a, 1.5), 0.7068, 1e-4);
    std::vector<double> u(4, 0.25);
    EXPECT_NEAR(true_power_trace(u, 2.5), 0.125, 1e-15);
    std::vector<double> z{1.0, 0.0};
    EXPECT_EQ(true_power_trace(z, 1.2), 1.0);
}

TEST(power_trace_plan, high_q) {
    auto p = power_trace_plan(3, 0.12, 100);
    EXPECT_EQ(p.algorithm, PowerTraceAlgorithm::TruncatedHighQ);
    EXPECT_NEAR(p.eps_prime, 0.02, 1e-15);
    EXPECT_EQ(p.m, 50);
    EXPECT_DOUBLE_EQ(p.delta_prime, 1.0 / 150);
    EXPECT_EQ(power_trace_plan(3, 0.12, 4).m, 4);
    EXPECT_EQ(power_trace_plan(2, 0.1, 10).algorithm, PowerTraceAlgorithm::TruncatedHighQ);
}

TEST(power_trace_plan, low_q) {
    auto p = power_trace_plan(1.5, 0.2, 1000);
    EXPECT_EQ(p.algorithm, PowerTraceAlgorithm::TruncatedLowQ);
    EXPECT_NEAR(p.eps_prime, 0.0016, 1e-15);
    EXPECT_EQ(p.m, 625);
    EXPECT_DOUBLE_EQ(p.delta_prime, 1.0 / 1875);
    EXPECT_FALSE(p.eps_prime_clamped);
}

TEST(power_trace_plan, clamp_never_needed_for_valid_eps) {
    for (double q : {1.01, 1.5, 1.99, 2.0, 5.0}) {
        EXPECT_FALSE(power_trace_plan(q, 0.999, 8).eps_prime_clamped);
    }
    EXPECT_THROW(power_trace_plan(1, 0.1, 4), std::invalid_argument);
    EXPECT_THROW(power_trace_plan(2, 1, 4), std::invalid_argument);
    EXPECT_THROW(power_trace_plan(2, 0.1, 0), std::invalid_argument);
}

TEST(plugin, baseline) {
    EXPECT_DOUBLE_EQ(plugin_baseline(Partition({2, 1}), 3, 2), 5.0 / 9.0);
    EXPECT_DOUBLE_EQ(plugin_baseline(Partition({4}), 4, 1.5), 1.0);
    EXPECT_THROW(plugin_baseline(Partition({2, 1}), 4, 2), std::invalid_argument);
    SchurWeylSampler s(Spectrum({0.5, 0.3, 0.2}));
    auto r = plugin_estimate(s, 2, 100000, RngStream(1, 0));
    EXPECT_EQ(r.algorithm, PowerTraceAlgorithm::PlugIn);
    EXPECT_NEAR(r.estimate, 0.38, 0.01);
}

TEST(power_trace, error_budget_holds_when_entries_are_accurate) {
    struct Case {
        std::vector<double> alpha;
        double q;
        double eps;
    };
    std::vector<Case> cases{{{0.5, 0.3, 0.2}, 2.5, 0.2}, {{0.4, 0.3, 0.2, 0.1}, 3, 0.3}, {{0.25, 0.25, 0.25, 0.25}, 2, 0.2}};
    int conditioned = 0;
    for (const auto &cs : cases) {
        SchurWeylSampler s{Spectrum(cs.alpha)};
        const double truth = true_power_trace(cs.alpha, cs.q);
        const auto plan = power_trace_plan(cs.q, cs.eps, static_cast<int>(cs.alpha.size()));
        for (int run = 0; run < 10; ++run) {
            RngStream rng(3, static_cast<std::uint64_t>(run));
            auto rep = power_trace_estimate(s, cs.q, cs.eps, 2.0, rng);
            auto est = spectrum_estimate(s, plan.eps_prime, plan.delta_prime, 2.0, rng);
            bool accurate = true;
            for (std::int64_t j = 0; j < plan.m; ++j) {
                accurate = accurate && std::abs(est.values[j] - cs.alpha[j]) <= plan.eps_prime;
            }
            if (!accurate) {
                continue;
            }
            ++conditioned;
            double budget = high_q_error_budget(cs.q, plan.eps_prime, plan.m, static_cast<int>(cs.alpha.size()));
            EXPECT_LE(std::abs(rep.estimate - truth), budget);
            EXPECT_LE(budget, cs.eps);
        }
    }
    EXPECT_GT(conditioned, 0);
}

TEST(power_trace, low_q_budget_holds_when_entries_are_accurate) {
    const std::vector<double> alpha{0.7, 0.2, 0.1};
    SchurWeylSampler s{Spectrum(alpha)};
    const double q = 1.5;
    const double eps = 0.3;
    const auto plan = power_trace_plan(q, eps, 3);
    double tail = 0;
    for (std::size_t j = plan.m; j < alpha.size(); ++j) {
        tail += std::pow(alpha[j], q);
    }
    for (int run = 0; run < 5; ++run) {
        RngStream rng(5, static_cast<std::uint64_t>(run));
        auto rep = power_trace_estimate(s, q, eps, 2.0, rng);
        auto est = spectrum_estimate(s, plan.eps_prime, plan.delta_prime, 2.0, rng);
        bool accurate = true;
        for (std::int64_t j = 0; j < plan.m; ++j) {
            accurate = accurate && std::abs(est.values[j] - alpha[j]) <= plan.eps_prime;
        }
        if (accurate) {
            EXPECT_LE(std::abs(rep.estimate - true_power_trace(alpha, q)),
                      low_q_error_budget(q, plan.eps_prime, plan.m, tail));
        }
    }
}

TEST(power_trace, success_rate) {
    SchurWeylSampler s(Spectrum({0.5, 0.3, 0.2}));
    const double truth = true_power_trace(std::vector<double>{0.5, 0.3, 0.2}, 3);
    int ok = 0;
    const int runs = 60;
    for (int run = 0; run < runs; ++run) {
        auto rep = power_trace_estimate(s, 3, 0.2, 2.0, RngStream(kDefaultSeed, static_cast<std::uint64_t>(run)));
        ok += std::abs(rep.estimate - truth) <= 0.2;
    }
    EXPECT_GE(ok, runs * 2 / 3);
}

TEST(power_trace, report_fields) {
    SchurWeylSampler s(Spectrum::uniform(4));
    auto rep = power_trace_estimate(s, 3, 0.12, 2.0, RngStream(7, 0));
    EXPECT_EQ(rep.algorithm, PowerTraceAlgorithm::TruncatedHighQ);
    EXPECT_EQ(rep.m, 4);
    EXPECT_EQ(rep.n_per_batch, 20000);
    EXPECT_EQ(rep.total_samples, rep.n_per_batch * rep.k_batches);
    EXPECT_EQ(rep.seed, 7u);
    auto again = power_trace_estimate(s, 3, 0.12, 2.0, RngStream(7, 0));
    EXPECT_EQ(rep.estimate, again.estimate);
}
