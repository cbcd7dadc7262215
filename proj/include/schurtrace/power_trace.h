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

#ifndef SCHURTRACE_POWER_TRACE_H
#define SCHURTRACE_POWER_TRACE_H

#include <cstdint>
#include <span>
#include <string_view>

#include "schurtrace/partition.h"
#include "schurtrace/rng.h"
#include "schurtrace/sampling.h"
#include "schurtrace/spectrum_estimation.h"

namespace schurtrace {

enum class PowerTraceAlgorithm { TruncatedHighQ, TruncatedLowQ, PlugIn };

std::string_view algorithm_name(PowerTraceAlgorithm a);

/// tr(rho^q) = sum_j alpha_j^q, with 0^q = 0. q > 0.
double true_power_trace(std::span<const double> alpha, double q);

/// Parameters of the truncated estimator.
///
///   q >= 2:     eps' = eps/(q+3)
///   1 < q < 2:  eps' = (eps/5)^(1/(q-1))
///   both:       m = min(ceil(1/eps'), d), delta' = 1/(3m)
///
/// q = 2 takes the high-q branch. If eps' comes out >= 1 it is clamped to 0.5
/// and eps_prime_clamped is set.
struct TruncationPlan {
    PowerTraceAlgorithm algorithm;
    double eps_prime;
    bool eps_prime_clamped;
    std::int64_t m;
    double delta_prime;
};

TruncationPlan power_trace_plan(double q, double eps, int d);

struct EstimateReport {
    PowerTraceAlgorithm algorithm;
    double q;
    double epsilon;
    double estimate;
    double eps_prime;
    bool eps_prime_clamped;
    std::int64_t m;
    double delta_prime;
    double c;
    std::int64_t n_per_batch;
    int k_batches;
    std::int64_t total_samples;
    std::uint64_t seed;
    std::uint64_t stream_id;
};

/// Truncated non-plug-in estimate of tr(rho^q): spectrum-estimate to (eps', delta'),
/// then sum the q-th powers of the first m medians. Succeeds (|error| <= eps) with
/// probability >= 2/3.
EstimateReport power_trace_estimate(const SchurWeylSampler &state, double q, double eps, double c,
                                    const RngStream &rng, int threads = 1);

/// sum_i (lambda_i / n)^q over all rows.
double plugin_baseline(const Partition &lambda, std::int64_t n, double q);

/// The plug-in estimator on a single draw lambda ~ SW^N, N = total_samples.
EstimateReport plugin_estimate(const SchurWeylSampler &state, double q, std::int64_t total_samples,
                               const RngStream &rng);

/// Deterministic error bound for the q >= 2 estimator when every used entry is
/// within eps' of the truth: q eps' + m eps'^2 + (m^{1-q} - d^{1-q})/(q-1).
double high_q_error_budget(double q, double eps_prime, std::int64_t m, int d);

/// Same for 1 < q < 2: eps' m^{2-q} (m eps' + 1)^{q-1} + eps'^{q-1} + tail,
/// where tail = sum_{j>m} alpha_j^q.
double low_q_error_budget(double q, double eps_prime, std::int64_t m, double tail);

}  // namespace schurtrace

#endif
