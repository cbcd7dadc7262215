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

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace schurtrace {

std::string_view algorithm_name(PowerTraceAlgorithm a) {
    switch (a) {
        case PowerTraceAlgorithm::TruncatedHighQ:
            return "TruncatedHighQ";
        case PowerTraceAlgorithm::TruncatedLowQ:
            return "TruncatedLowQ";
        case PowerTraceAlgorithm::PlugIn:
            return "PlugIn";
    }
    return "unknown";
}

double true_power_trace(std::span<const double> alpha, double q) {
    if (!(q > 0)) {
        throw std::invalid_argument("true_power_trace: q must be positive");
    }
    double total = 0;
    for (double a : alpha) {
        if (a > 0) {
            total += std::pow(a, q);
        }
    }
    return total;
}

TruncationPlan power_trace_plan(double q, double eps, int d) {
    if (!(q > 1) || !std::isfinite(q)) {
        throw std::invalid_argument("power trace estimation needs q > 1");
    }
    if (!(eps > 0 && eps < 1)) {
        throw std::invalid_argument("power trace estimation needs eps in (0,1)");
    }
    if (d < 1) {
        throw std::invalid_argument("power trace estimation needs d >= 1");
    }
    TruncationPlan plan{};
    if (q >= 2) {
        plan.algorithm = PowerTraceAlgorithm::TruncatedHighQ;
        plan.eps_prime = eps / (q + 3);
    } else {
        plan.algorithm = PowerTraceAlgorithm::TruncatedLowQ;
        plan.eps_prime = std::pow(eps / 5, 1 / (q - 1));
    }
    if (plan.eps_prime >= 1) {
        plan.eps_prime = 0.5;
        plan.eps_prime_clamped = true;
    }
    if (!(plan.eps_prime > 0)) {
        throw std::invalid_argument("eps' underflows to 0 for q = " + std::to_string(q) +
                                    ", eps = " + std::to_string(eps));
    }
    const double inverse = 1 / plan.eps_prime;
    plan.m = inverse >= d ? d : std::min<std::int64_t>(ceil_snapped(inverse), d);
    plan.delta_prime = 1.0 / (3.0 * static_cast<double>(plan.m));
    return plan;
}

EstimateReport power_trace_estimate(const SchurWeylSampler &state, double q, double eps, double c,
                                    const RngStream &rng, int threads) {
    const TruncationPlan plan = power_trace_plan(q, eps, state.dimension());
    const SpectrumEstimate est = spectrum_estimate(state, plan.eps_prime, plan.delta_prime, c, rng, threads);
    double estimate = 0;
    for (std::int64_t j = 0; j < plan.m; ++j) {
        estimate += std::pow(est.values[static_cast<std::size_t>(j)], q);
    }
    return EstimateReport{plan.algorithm, q,          eps,           estimate,        plan.eps_prime,
                          plan.eps_prime_clamped,     plan.m,        plan.delta_prime, c,
                          est.n_per_batch,            est.k_batches, est.total_samples, rng.seed(),
                          rng.stream_id()};
}

double plugin_baseline(const Partition &lambda, std::int64_t n, double q) {
    if (n != lambda.size()) {
        throw std::invalid_argument("plugin_baseline: n = " + std::to_string(n) + " but lambda has " +
                                    std::to_string(lambda.size()) + " boxes");
    }
    double total = 0;
    for (int row : lambda.rows()) {
        total += std::pow(static_cast<double>(row) / static_cast<double>(n), q);
    }
    return total;
}

EstimateReport plugin_estimate(const SchurWeylSampler &state, double q, std::int64_t total_samples,
                               const RngStream &rng) {
    if (total_samples < 1 || total_samples > std::numeric_limits<int>::max()) {
        throw std::invalid_argument("plugin_estimate: sample budget out of range");
    }
    RngStream stream = rng.substream(0);
    Partition lambda = state.draw(static_cast<int>(total_samples), stream);
    EstimateReport out{};
    out.algorithm = PowerTraceAlgorithm::PlugIn;
    out.q = q;
    out.estimate = plugin_baseline(lambda, total_samples, q);
    out.m = state.dimension();
    out.n_per_batch = total_samples;
    out.k_batches = 1;
    out.total_samples = total_samples;
    out.seed = rng.seed();
    out.stream_id = rng.stream_id();
    return out;
}

double high_q_error_budget(double q, double eps_prime, std::int64_t m, int d) {
    const auto md = static_cast<double>(m);
    return q * eps_prime + md * eps_prime * eps_prime +
           (std::pow(md, 1 - q) - std::pow(static_cast<double>(d), 1 - q)) / (q - 1);
}

double low_q_error_budget(double q, double eps_prime, std::int64_t m, double tail) {
    const auto md = static_cast<double>(m);
    return eps_prime * std::pow(md, 2 - q) * std::pow(md * eps_prime + 1, q - 1) + std::pow(eps_prime, q - 1) +
           tail;
}

}  // namespace schurtrace
