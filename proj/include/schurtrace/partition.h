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

#ifndef SCHURTRACE_PARTITION_H
#define SCHURTRACE_PARTITION_H

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "schurtrace/exact.h"

namespace schurtrace {

/// A Young diagram: positive, non-increasing row lengths.
///
/// The default-constructed value is the empty diagram of 0 boxes. Every other
/// value is built through the validating constructor, so a Partition in hand
/// always satisfies the row invariants.
class Partition {
  public:
    Partition() = default;

    /// Throws std::invalid_argument unless rows are positive and non-increasing.
    explicit Partition(std::vector<int> rows);

    /// Drops trailing zero rows first; used by samplers that track a fixed
    /// number of (possibly empty) rows.
    static Partition from_padded_rows(std::vector<int> rows);

    /// Parses "4|2|1".
    static Partition parse(std::string_view text);

    const std::vector<int> &rows() const {
        return rows_;
    }
    int size() const {
        return n_;
    }
    int length() const {
        return static_cast<int>(rows_.size());
    }
    /// Row j (0-based); 0 past the last row.
    int row(std::size_t j) const {
        return j < rows_.size() ? rows_[j] : 0;
    }

    /// "4|2|1"
    std::string str() const;

    /// Lexicographic on rows. Descending order of this comparison is the
    /// canonical enumeration order.
    friend std::strong_ordering operator<=>(const Partition &a, const Partition &b) {
        return a.rows_ <=> b.rows_;
    }
    friend bool operator==(const Partition &a, const Partition &b) {
        return a.rows_ == b.rows_;
    }

  private:
    std::vector<int> rows_;
    int n_ = 0;
};

/// Largest n accepted by enumerate_partitions; p(60) = 966467.
inline constexpr int kMaxEnumerableBoxes = 60;

/// All partitions of n with at most max_rows rows, in descending lexicographic order.
std::vector<Partition> enumerate_partitions(int n, std::optional<int> max_rows = std::nullopt);

/// Hook lengths in row-major cell order.
std::vector<int> hook_lengths(const Partition &lambda);

/// Number of standard Young tableaux of shape lambda (the dimension of the
/// symmetric-group irrep), by the hook-length formula.
BigInt dim_sym(const Partition &lambda);

}  // namespace schurtrace

#endif
