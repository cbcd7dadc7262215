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

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

namespace schurtrace {

BatchPlan spectrum_batch_plan(double eps, double delta, double c) {
    if (!(eps > 0 && eps < 1)) {
        throw std::invalid_argument("spectrum estimation: eps must lie in (0,1)");
    }
    if (!(delta > 0 && delta < 1)) {
        throw std::invalid_argument("spectrum estimation: delta must lie in (0,1)");
    }
    if (!(c > 0) || !std::isfinite(c)) {
        throw std::invalid_argument("spectrum estimation: c must be positive");
    }
    std::int64_t n = ceil_snapped(4.0 * c / (eps * eps));
    if (n > std::numeric_limits<int>::max()) {
        throw std::length_error("spectrum estimation: batch size " + std::to_string(n) + " exceeds int range");
    }
    std::int64_t k = ceil_snapped(72.0 * std::log(2.0 / delta));
    if (k % 2 == 0) {
        ++k;
    }
    return {std::max<std::int64_t>(n, 1), static_cast<int>(k)};
}

double median(std::vector<double> values) {
    if (values.empty() || values.size() % 2 == 0) {
        throw std::invalid_argument("median needs an odd number of values");
    }
    auto mid = values.begin() + static_cast<std::ptrdiff_t>(values.size() / 2);
    std::nth_element(values.begin(), mid, values.end());
    return *mid;
}

SpectrumEstimate spectrum_estimate(const SchurWeylSampler &state, double eps, double delta, double c,
                                   const RngStream &rng, int threads) {
    const BatchPlan plan = spectrum_batch_plan(eps, delta, c);
    const int d = state.dimension();
    const int n = static_cast<int>(plan.n_per_batch);
    const int k = plan.k_batches;

    // rows[j * k + l] = lambda^(l)_j / n
    std::vector<double> rows(static_cast<std::size_t>(d) * k, 0.0);
    auto run_batch = [&](int l) {
        RngStream stream = rng.substream(static_cast<std::uint64_t>(l));
        Partition lambda = state.draw(n, stream);
        for (int j = 0; j < d; ++j) {
            rows[static_cast<std::size_t>(j) * k + l] = static_cast<double>(lambda.row(j)) / n;
        }
    };
    threads = std::clamp(threads, 1, k);
    if (threads == 1) {
        for (int l = 0; l < k; ++l) {
            run_batch(l);
        }
    } else {
        std::atomic<int> next{0};
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) {
            pool.emplace_back([&] {
                for (int l = next++; l < k; l = next++) {
                    run_batch(l);
                }
            });
        }
        for (auto &th : pool) {
            th.join();
        }
    }

    SpectrumEstimate out{{}, plan.n_per_batch, k, eps, delta, c,
                         plan.n_per_batch * k, rng.seed(), rng.stream_id()};
    out.values.reserve(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) {
        auto first = rows.begin() + static_cast<std::ptrdiff_t>(j) * k;
        out.values.push_back(median(std::vector<double>(first, first + k)));
    }
    return out;
}

}  // namespace schurtrace
