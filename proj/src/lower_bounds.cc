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

#include "schurtrace/lower_bounds.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "schurtrace/power_trace.h"

namespace schurtrace {

namespace {

// a and b are the diagonals in the common eigenbasis, not sorted spectra.
void fill_distances(HardInstance &h, std::span<const double> a, std::span<const double> b) {
    h.trace_first = true_power_trace(a, h.q);
    h.trace_second = true_power_trace(b, h.q);
    h.trace_gap = h.trace_first - h.trace_second;
    h.fidelity = fidelity_commuting(a, b);
    h.infidelity = 1 - h.fidelity;
    h.l1 = 0;
    for (std::size_t j = 0; j < std::max(a.size(), b.size()); ++j) {
        double x = j < a.size() ? a[j] : 0.0;
        double y = j < b.size() ? b[j] : 0.0;
        h.l1 += std::abs(x - y);
    }
}

}  // namespace

HardInstance hard_pair_qubit(double q, double eps) {
    if (!(q > 1)) {
        throw std::invalid_argument("hard_pair_qubit: q must exceed 1");
    }
    if (!(eps >= 0 && eps < 1.0 / 3.0)) {
        throw std::invalid_argument("hard_pair_qubit: eps must lie in [0, 1/3)");
    }
    // Built from the first entry so both vectors sum to 1 up to one rounding.
    const std::vector<double> a{2.0 / 3.0 + eps, 1.0 / 3.0 - eps};
    const double lo = 2.0 / 3.0 - eps;
    const std::vector<double> b{lo, 1 - lo};
    // For eps > 1/6 the second state's larger eigenvalue sits on the second basis vector.
    HardInstance h{HardInstanceKind::QubitPair, Spectrum({a[0], 1 - a[0]}),
                   Spectrum({std::max(b[0], b[1]), std::min(b[0], b[1])}), q, eps, 0, 0, 0, 0, 0, 0};
    fill_distances(h, a, b);
    return h;
}

HardInstance hard_pair_maximally_mixed(double q, double eps) {
    if (!(q > 1 && q < 2)) {
        throw std::invalid_argument("hard_pair_maximally_mixed: q must lie in (1,2)");
    }
    if (!(eps > 0 && eps < 1)) {
        throw std::invalid_argument("hard_pair_maximally_mixed: eps must lie in (0,1)");
    }
    const double power = 1 / (q - 1);
    const double r_real = std::floor(1 / std::pow(2 * eps, power));
    const double d_real = std::floor(1 / std::pow(eps, power)) + 1;
    if (r_real < 1) {
        throw std::range_error("hard_pair_maximally_mixed: r = floor(1/(2 eps)^{1/(q-1)}) < 1 for eps = " +
                               std::to_string(eps));
    }
    if (d_real > 5.0e7) {
        throw std::range_error("hard_pair_maximally_mixed: dimension " + std::to_string(d_real) +
                               " too large to materialize");
    }
    HardInstance h = mixed_pair_instance(static_cast<int>(r_real), static_cast<int>(d_real), q);
    h.epsilon = eps;
    if (!(h.trace_first >= 2 * eps * (1 - 1e-12)) || !(h.trace_second <= eps * (1 + 1e-12))) {
        throw std::logic_error("hard_pair_maximally_mixed: separation 1/r^{q-1} >= 2eps >= 2/d^{q-1} violated");
    }
    return h;
}

HardInstance mixed_pair_instance(int r, int d, double q) {
    if (r < 1 || d <= r) {
        throw std::invalid_argument("mixed pair needs 1 <= r < d");
    }
    HardInstance h{HardInstanceKind::MixedPair, Spectrum::uniform(r, d), Spectrum::uniform(d, d), q, 0,
                   0, 0, 0, 0, 0, 0, r, d};
    fill_distances(h, h.first.values(), h.second.values());
    // Closed forms; the sums above only agree with them up to rounding.
    h.trace_first = std::pow(static_cast<double>(r), 1 - q);
    h.trace_second = std::pow(static_cast<double>(d), 1 - q);
    h.trace_gap = h.trace_first - h.trace_second;
    h.fidelity = std::sqrt(static_cast<double>(r) / d);
    h.infidelity = 1 - h.fidelity;
    h.l1 = 2.0 * (d - r) / d;
    return h;
}

double fidelity_commuting(std::span<const double> a, std::span<const double> b) {
    double f = 0;
    for (std::size_t j = 0; j < std::min(a.size(), b.size()); ++j) {
        f += std::sqrt(a[j] * b[j]);
    }
    return f;
}

double helstrom_bound(double l1) {
    if (!(l1 >= 0 && l1 <= 2)) {
        throw std::invalid_argument("helstrom_bound: l1 distance must lie in [0,2]");
    }
    return 0.5 + l1 / 4;
}

Rational mixed_pair_l1(int n, int r, int d, std::optional<int> cap) {
    if (n < 1 || r < n || d < r) {
        throw std::invalid_argument("mixed_pair_l1 requires 1 <= n <= r <= d");
    }
    // Stability: SW^n of uniform(r) padded with zeros to d equals SW^n_r.
    return l1_distance(sw_exact_uniform(r, n, cap), sw_exact_uniform(d, n, cap));
}

DiscriminationResult discrimination_experiment(const HardInstance &pair, const DecisionRule &rule,
                                               std::int64_t trials, const RngStream &rng) {
    if (trials < kMinDiscriminationTrials) {
        throw std::invalid_argument("discrimination_experiment needs at least " +
                                    std::to_string(kMinDiscriminationTrials) + " trials");
    }
    const SchurWeylSampler first(pair.first);
    const SchurWeylSampler second(pair.second);
    std::int64_t correct = 0;
    for (std::int64_t t = 0; t < trials; ++t) {
        RngStream stream = rng.substream(static_cast<std::uint64_t>(t));
        int truth = static_cast<int>(stream.uniform_below(2)) + 1;
        int guess = rule(truth == 1 ? first : second, stream);
        correct += guess == truth ? 1 : 0;
    }
    double rate = static_cast<double>(correct) / static_cast<double>(trials);
    return {trials, correct, rate, std::sqrt(rate * (1 - rate) / static_cast<double>(trials))};
}

DecisionRule constant_rule(int guess) {
    return [guess](const SchurWeylSampler &, RngStream &) { return guess; };
}

DecisionRule likelihood_ratio_rule(ExactDistribution first, ExactDistribution second) {
    if (first.n() != second.n()) {
        throw std::invalid_argument("likelihood_ratio_rule: tables over different n");
    }
    return [p = std::move(first), q = std::move(second)](const SchurWeylSampler &state, RngStream &rng) {
        Partition lambda = state.draw(p.n(), rng);
        return p.probability(lambda) >= q.probability(lambda) ? 1 : 2;
    };
}

DecisionRule power_trace_threshold_rule(double q, double eps_est, double threshold, double c) {
    return [=](const SchurWeylSampler &state, RngStream &rng) {
        RngStream inner = rng.substream(1);
        return power_trace_estimate(state, q, eps_est, c, inner).estimate >= threshold ? 1 : 2;
    };
}

std::vector<double> sw_qubit_float(double a, double b, int n) {
    if (n < 1 || !(a >= b) || !(b >= 0) || std::abs(a + b - 1) > 1e-12) {
        throw std::invalid_argument("sw_qubit_float: need a >= b >= 0, a + b = 1, n >= 1");
    }
    std::vector<double> out(static_cast<std::size_t>(n / 2) + 1, 0.0);
    for (int k = 0; k <= n / 2; ++k) {
        const int m = n - 2 * k;
        // f^(n-k,k) = C(n,k) (n-2k+1)/(n-k+1)
        double log_f = std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0) +
                       std::log((m + 1.0) / (n - k + 1.0));
        // s_(n-k,k)(a,b) = (ab)^k h_m(a,b), h_m = sum_{i=0}^m a^i b^{m-i}
        double log_h;
        if (b == 0) {
            log_h = m * std::log(a);
        } else if (a == b) {
            log_h = std::log(m + 1.0) + m * std::log(a);
        } else {
            double ratio = b / a;
            log_h = m * std::log(a) + std::log1p(-std::pow(ratio, m + 1)) - std::log1p(-ratio);
        }
        double log_s = (b == 0 && k > 0) ? -INFINITY : k * std::log(a * b) + log_h;
        out[k] = std::exp(log_f + log_s);
    }
    return out;
}

std::optional<int> qubit_required_samples(double eps, double target, int max_n) {
    auto success = [&](int n) {
        const HardInstance h = hard_pair_qubit(2, eps);
        auto p = sw_qubit_float(h.first[0], h.first[1], n);
        auto q = sw_qubit_float(h.second[0], h.second[1], n);
        double l1 = 0;
        for (std::size_t k = 0; k < p.size(); ++k) {
            l1 += std::abs(p[k] - q[k]);
        }
        return helstrom_bound(std::min(l1, 2.0));
    };
    // Doubling then bisection; success of the likelihood-ratio test grows with n.
    int hi = 1;
    while (success(hi) < target) {
        if (hi >= max_n) {
            return std::nullopt;
        }
        hi = std::min(2 * hi, max_n);
    }
    int lo = hi / 2;
    while (hi - lo > 1) {
        int mid = lo + (hi - lo) / 2;
        (success(mid) >= target ? hi : lo) = mid;
    }
    return hi;
}

}  // namespace schurtrace
