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

#include "schurtrace/partition.h"

#include <limits>
#include <stdexcept>

namespace schurtrace {

Partition::Partition(std::vector<int> rows) : rows_(std::move(rows)) {
    long long total = 0;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i] <= 0) {
            throw std::invalid_argument("partition rows must be positive");
        }
        if (i > 0 && rows_[i] > rows_[i - 1]) {
            throw std::invalid_argument("partition rows must be non-increasing");
        }
        total += rows_[i];
    }
    if (total > std::numeric_limits<int>::max()) {
        throw std::overflow_error("partition size exceeds int range");
    }
    n_ = static_cast<int>(total);
}

Partition Partition::from_padded_rows(std::vector<int> rows) {
    while (!rows.empty() && rows.back() == 0) {
        rows.pop_back();
    }
    return Partition(std::move(rows));
}

Partition Partition::parse(std::string_view text) {
    std::vector<int> rows;
    while (!text.empty()) {
        auto bar = text.find('|');
        std::string part(text.substr(0, bar));
        std::size_t used = 0;
        int v = std::stoi(part, &used);
        if (used != part.size()) {
            throw std::invalid_argument("bad partition literal: '" + part + "'");
        }
        rows.push_back(v);
        if (bar == std::string_view::npos) {
            break;
        }
        text.remove_prefix(bar + 1);
    }
    return Partition(std::move(rows));
}

std::string Partition::str() const {
    std::string out;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (i) {
            out += '|';
        }
        out += std::to_string(rows_[i]);
    }
    return out;
}

namespace {

void enumerate_into(int remaining, int max_part, int rows_left, std::vector<int> &prefix,
                    std::vector<Partition> &out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    if (rows_left == 0) {
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        // Remaining boxes must fit in the rows still available.
        if (static_cast<long long>(part) * rows_left < remaining) {
            break;
        }
        prefix.push_back(part);
        enumerate_into(remaining - part, part, rows_left - 1, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n, std::optional<int> max_rows) {
    if (n < 1) {
        throw std::invalid_argument("enumerate_partitions: n must be >= 1");
    }
    if (n > kMaxEnumerableBoxes) {
        throw std::length_error("enumerate_partitions: n = " + std::to_string(n) +
                                " exceeds the enumeration limit " +
                                std::to_string(kMaxEnumerableBoxes));
    }
    if (max_rows && *max_rows < 1) {
        throw std::invalid_argument("enumerate_partitions: max_rows must be >= 1");
    }
    int rows = max_rows ? std::min(*max_rows, n) : n;
    std::vector<Partition> out;
    std::vector<int> prefix;
    enumerate_into(n, n, rows, prefix, out);
    return out;
}

std::vector<int> hook_lengths(const Partition &lambda) {
    const auto &rows = lambda.rows();
    std::vector<int> hooks;
    hooks.reserve(static_cast<std::size_t>(lambda.size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (int j = 0; j < rows[i]; ++j) {
            int arm = rows[i] - j - 1;
            int leg = 0;
            for (std::size_t k = i + 1; k < rows.size() && rows[k] > j; ++k) {
                ++leg;
            }
            hooks.push_back(arm + leg + 1);
        }
    }
    return hooks;
}

BigInt dim_sym(const Partition &lambda) {
    BigInt hook_product = 1;
    for (int h : hook_lengths(lambda)) {
        hook_product *= h;
    }
    return factorial(lambda.size()) / hook_product;
}

}  // namespace schurtrace
