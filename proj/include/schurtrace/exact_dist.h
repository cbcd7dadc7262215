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

#ifndef SCHURTRACE_EXACT_DIST_H
#define SCHURTRACE_EXACT_DIST_H

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "schurtrace/exact.h"
#include "schurtrace/partition.h"
#include "schurtrace/spectrum.h"

namespace schurtrace {

inline constexpr int kDefaultExactCap = 16;
inline constexpr int kHardExactCap = 30;
inline constexpr const char *kExactCapEnvVar = "SCHURTRACE_EXACT_CAP";

/// The box-count cap for exact tables: SCHURTRACE_EXACT_CAP if set, else 16.
/// Values above 30 are rejected.
int exact_cap();

/// An exact probability table over partitions of n, in descending lexicographic order.
class ExactDistribution {
  public:
    using Entry = std::pair<Partition, Rational>;

    /// Validates non-negativity, sum exactly 1, and that every shape has n boxes.
    /// Entries are re-sorted into the canonical order.
    ExactDistribution(int n, std::vector<Entry> entries);

    int n() const {
        return n_;
    }
    const std::vector<Entry> &entries() const {
        return entries_;
    }
    /// Zero for shapes outside the stored support.
    Rational probability(const Partition &lambda) const;

  private:
    int n_;
    std::vector<Entry> entries_;
};

/// SW^n(alpha): entries[lambda] = f^lambda s_lambda(alpha) for every lambda with
/// at most d rows. Maximally mixed spectra (uniform on their support) go through
/// the hook-content formula; everything else through Jacobi-Trudi.
ExactDistribution sw_exact(const ExactSpectrum &alpha, int n, std::optional<int> cap = std::nullopt);

/// SW^n_d, the uniform-spectrum special case.
ExactDistribution sw_exact_uniform(int d, int n, std::optional<int> cap = std::nullopt);

/// Planch(n): entries[lambda] = (f^lambda)^2 / n!.
ExactDistribution planch_exact(int n, std::optional<int> cap = std::nullopt);

/// Sum of |P - Q| over the union of the supports. Throws on mismatched n.
Rational l1_distance(const ExactDistribution &p, const ExactDistribution &q);

struct ChwBoundCheck {
    int n;
    int d;
    Rational lower;          // n / (36 d)
    Rational value;          // || SW^n_d - Planch(n) ||_1
    Rational upper_squared;  // 2 n^2 / d^2
    double upper;            // sqrt(2) n / d, for display only
    bool pass;
};

/// n/(36d) <= ||SW^n_d - Planch(n)||_1 <= sqrt(2) n/d, decided exactly (the upper
/// side compares squares). Requires 2 <= n <= d.
ChwBoundCheck check_chw_bounds(int n, int d, std::optional<int> cap = std::nullopt);

/// E[(lambda_j - alpha_j n)^2] under SW^n(alpha), with lambda_j = 0 past the last row.
/// j is 1-based, 1 <= j <= d.
Rational exact_row_second_moment(const ExactSpectrum &alpha, int n, int j,
                                 std::optional<int> cap = std::nullopt);

/// Exact law of f(lambda) for lambda ~ P. Values with equal f are merged.
template <typename F>
auto estimator_pushforward(const ExactDistribution &p, F f) {
    using Value = std::decay_t<decltype(f(std::declval<const Partition &>()))>;
    std::map<Value, Rational> out;
    for (const auto &[lambda, prob] : p.entries()) {
        if (prob != 0) {
            out[f(lambda)] += prob;
        }
    }
    return out;
}

}  // namespace schurtrace

#endif
