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

#include "schurtrace/exact_dist.h"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <string>

#include "schurtrace/schur.h"

namespace schurtrace {

int exact_cap() {
    const char *env = std::getenv(kExactCapEnvVar);
    if (env == nullptr || *env == '\0') {
        return kDefaultExactCap;
    }
    std::string text(env);
    std::size_t used = 0;
    int cap = 0;
    try {
        cap = std::stoi(text, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used != text.size() || cap < 1) {
        throw std::invalid_argument(std::string(kExactCapEnvVar) + " must be a positive integer, got '" +
                                    text + "'");
    }
    if (cap > kHardExactCap) {
        throw std::invalid_argument(std::string(kExactCapEnvVar) + "=" + text + " exceeds the hard limit " +
                                    std::to_string(kHardExactCap));
    }
    return cap;
}

namespace {

void check_size(int n, std::optional<int> cap) {
    int limit = cap ? *cap : exact_cap();
    if (limit > kHardExactCap) {
        throw std::invalid_argument("exact cap above the hard limit " + std::to_string(kHardExactCap));
    }
    if (n < 1) {
        throw std::invalid_argument("exact tables need n >= 1");
    }
    if (n > limit) {
        throw std::length_error("n = " + std::to_string(n) + " exceeds the exact-oracle cap " +
                                std::to_string(limit) + " (set " + kExactCapEnvVar + " to raise it)");
    }
}

}  // namespace

ExactDistribution::ExactDistribution(int n, std::vector<Entry> entries) : n_(n), entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end(),
              [](const Entry &a, const Entry &b) { return a.first > b.first; });
    Rational total = 0;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        const auto &[lambda, p] = entries_[i];
        if (lambda.size() != n_) {
            throw std::invalid_argument("distribution entry " + lambda.str() + " is not a partition of " +
                                        std::to_string(n_));
        }
        if (i > 0 && entries_[i - 1].first == lambda) {
            throw std::invalid_argument("duplicate distribution entry " + lambda.str());
        }
        if (p < 0) {
            throw std::invalid_argument("negative probability for " + lambda.str());
        }
        total += p;
    }
    if (total != 1) {
        throw std::invalid_argument("probabilities sum to " + to_pq_string(total) + ", not 1");
    }
}

Rational ExactDistribution::probability(const Partition &lambda) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), lambda,
                               [](const Entry &e, const Partition &key) { return e.first > key; });
    if (it != entries_.end() && it->first == lambda) {
        return it->second;
    }
    return 0;
}

ExactDistribution sw_exact(const ExactSpectrum &alpha, int n, std::optional<int> cap) {
    check_size(n, cap);
    const bool uniform = alpha.is_uniform_on_support();
    const int rank = alpha.rank();
    std::vector<ExactDistribution::Entry> entries;
    for (auto &lambda : enumerate_partitions(n, alpha.dimension())) {
        Rational s = uniform ? schur_uniform(lambda, rank) : schur_poly(lambda, alpha);
        Rational p = Rational(dim_sym(lambda)) * s;
        entries.emplace_back(std::move(lambda), std::move(p));
    }
    return ExactDistribution(n, std::move(entries));
}

ExactDistribution sw_exact_uniform(int d, int n, std::optional<int> cap) {
    check_size(n, cap);
    if (d < 1) {
        throw std::invalid_argument("sw_exact_uniform: d must be >= 1");
    }
    std::vector<ExactDistribution::Entry> entries;
    for (auto &lambda : enumerate_partitions(n, d)) {
        Rational p = Rational(dim_sym(lambda)) * schur_uniform(lambda, d);
        entries.emplace_back(std::move(lambda), std::move(p));
    }
    return ExactDistribution(n, std::move(entries));
}

ExactDistribution planch_exact(int n, std::optional<int> cap) {
    check_size(n, cap);
    const BigInt n_factorial = factorial(n);
    std::vector<ExactDistribution::Entry> entries;
    for (auto &lambda : enumerate_partitions(n)) {
        BigInt f = dim_sym(lambda);
        entries.emplace_back(std::move(lambda), Rational(f * f, n_factorial));
    }
    return ExactDistribution(n, std::move(entries));
}

Rational l1_distance(const ExactDistribution &p, const ExactDistribution &q) {
    if (p.n() != q.n()) {
        throw std::invalid_argument("l1_distance: tables over different n (" + std::to_string(p.n()) + " vs " +
                                    std::to_string(q.n()) + ")");
    }
    // Both entry lists are sorted descending; merge them.
    Rational total = 0;
    const auto &a = p.entries();
    const auto &b = q.entries();
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first > b[j].first)) {
            total += abs(a[i++].second);
        } else if (i == a.size() || b[j].first > a[i].first) {
            total += abs(b[j++].second);
        } else {
            total += abs(Rational(a[i++].second - b[j++].second));
        }
    }
    return total;
}

ChwBoundCheck check_chw_bounds(int n, int d, std::optional<int> cap) {
    if (n < 2 || d < n) {
        throw std::invalid_argument("check_chw_bounds requires 2 <= n <= d");
    }
    ChwBoundCheck out{n, d, Rational(n, 36 * d), 0, Rational(2 * n * n, d * d), 1.4142135623730951 * n / d,
                      false};
    out.value = l1_distance(sw_exact_uniform(d, n, cap), planch_exact(n, cap));
    out.pass = out.lower <= out.value && out.value * out.value <= out.upper_squared;
    return out;
}

Rational exact_row_second_moment(const ExactSpectrum &alpha, int n, int j, std::optional<int> cap) {
    if (j < 1 || j > alpha.dimension()) {
        throw std::invalid_argument("exact_row_second_moment: need 1 <= j <= d");
    }
    auto table = sw_exact(alpha, n, cap);
    const Rational center = alpha.values()[j - 1] * n;
    Rational moment = 0;
    for (const auto &[lambda, p] : table.entries()) {
        Rational dev = Rational(lambda.row(static_cast<std::size_t>(j - 1))) - center;
        moment += p * dev * dev;
    }
    return moment;
}

}  // namespace schurtrace
