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

#ifndef SCHURTRACE_LOWER_BOUNDS_H
#define SCHURTRACE_LOWER_BOUNDS_H

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "schurtrace/exact_dist.h"
#include "schurtrace/rng.h"
#include "schurtrace/sampling.h"
#include "schurtrace/spectrum.h"

namespace schurtrace {

enum class HardInstanceKind { QubitPair, MixedPair };

/// Two simultaneously diagonal states that a good tr(rho^q) estimator would tell apart.
struct HardInstance {
    HardInstanceKind kind;
    Spectrum first;
    Spectrum second;
    double q;
    double epsilon;
    double trace_first;   // tr(first^q)
    double trace_second;  // tr(second^q)
    double trace_gap;     // trace_first - trace_second
    double fidelity;      // sum_j sqrt(a_j b_j)
    double infidelity;    // 1 - fidelity
    double l1;            // sum_j |a_j - b_j| (trace norm of the difference)
    int r = 0;            // MixedPair only
    int d = 0;            // MixedPair only
};

/// (2/3 + eps, 1/3 - eps) versus (2/3 - eps, 1/3 + eps). Needs q > 1, 0 <= eps < 1/3.
HardInstance hard_pair_qubit(double q, double eps);

/// Uniform on r = floor(1/(2 eps)^{1/(q-1)}) versus uniform on d = floor(1/eps^{1/(q-1)}) + 1,
/// both embedded in dimension d. Needs 1 < q < 2 and r >= 1; checks the trace
/// separation 1/r^{q-1} >= 2 eps and 1/d^{q-1} <= eps.
HardInstance hard_pair_maximally_mixed(double q, double eps);

/// uniform(r) versus uniform(d), both in dimension d, without the eps-derived checks.
HardInstance mixed_pair_instance(int r, int d, double q);

/// Fidelity of commuting states with spectra a, b (shorter one zero-padded).
double fidelity_commuting(std::span<const double> a, std::span<const double> b);

/// Optimal success probability for two equiprobable states: 1/2 + l1/4. l1 in [0,2].
double helstrom_bound(double l1);

/// ||SW^n_r - SW^n_d||_1 exactly; n <= r <= d, n within the exact cap.
Rational mixed_pair_l1(int n, int r, int d, std::optional<int> cap = std::nullopt);

/// A rule gets sample access to the hidden state and answers 1 or 2.
using DecisionRule = std::function<int(const SchurWeylSampler &, RngStream &)>;

struct DiscriminationResult {
    std::int64_t trials;
    std::int64_t correct;
    double rate;
    double sigma;  // binomial standard error sqrt(rate(1-rate)/trials)
};

inline constexpr std::int64_t kMinDiscriminationTrials = 100;

/// Balanced rounds: trial t uses rng.substream(t) to pick the hidden case
/// uniformly and then hands that stream to the rule. trials < 100 throws.
DiscriminationResult discrimination_experiment(const HardInstance &pair, const DecisionRule &rule,
                                               std::int64_t trials, const RngStream &rng);

DecisionRule constant_rule(int guess);

/// Draws one lambda of size first.n() and answers the case with the larger
/// exact probability (ties go to 1).
DecisionRule likelihood_ratio_rule(ExactDistribution first, ExactDistribution second);

/// Runs the truncated power-trace estimator and answers 1 iff the estimate is
/// at least `threshold`.
DecisionRule power_trace_threshold_rule(double q, double eps_est, double threshold, double c);

/// SW^n(a, b) for a qubit spectrum in binary64: entry k is Pr[lambda = (n-k, k)].
std::vector<double> sw_qubit_float(double a, double b, int n);

/// Smallest n for which the likelihood-ratio rule on one lambda ~ SW^n reaches
/// success >= target on the qubit pair, or nullopt if none up to max_n.
std::optional<int> qubit_required_samples(double eps, double target, int max_n);

}  // namespace schurtrace

#endif
