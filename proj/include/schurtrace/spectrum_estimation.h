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

#ifndef SCHURTRACE_SPECTRUM_ESTIMATION_H
#define SCHURTRACE_SPECTRUM_ESTIMATION_H

#include <cstdint>
#include <vector>

#include "schurtrace/rng.h"
#include "schurtrace/sampling.h"

namespace schurtrace {

/// Default for the second-moment constant c in E[(lambda_j/n - alpha_j)^2] <= c/n.
inline constexpr double kDefaultMomentConstant = 2.0;

struct BatchPlan {
    std::int64_t n_per_batch;  // ceil(4c / eps^2)
    int k_batches;             // ceil(72 ln(2/delta)), rounded up to odd
};

/// Batch sizes for entry-wise spectrum estimation. Throws std::invalid_argument
/// for eps or delta outside (0,1) or c <= 0, std::length_error if n overflows int.
BatchPlan spectrum_batch_plan(double eps, double delta, double c);

/// Middle order statistic of an odd-length sample. Even or empty input throws.
double median(std::vector<double> values);

struct SpectrumEstimate {
    std::vector<double> values;  // raw per-row medians; not re-sorted, not projected
    std::int64_t n_per_batch;
    int k_batches;
    double epsilon;
    double delta;
    double c;
    std::int64_t total_samples;
    std::uint64_t seed;
    std::uint64_t stream_id;
};

/// Median-of-batches weak Schur sampling: k independent lambda ~ SW^n, and
/// alpha_hat_j = median_l lambda^(l)_j / n for j = 1..d.
///
/// Batch l draws from rng.substream(l), so the result does not depend on
/// `threads`. Each entry satisfies |alpha_hat_j - alpha_j| <= eps with
/// probability >= 1 - delta whenever c bounds the normalized second moment.
SpectrumEstimate spectrum_estimate(const SchurWeylSampler &state, double eps, double delta, double c,
                                   const RngStream &rng, int threads = 1);

}  // namespace schurtrace

#endif
