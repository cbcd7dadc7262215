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

#ifndef SCHURTRACE_RNG_H
#define SCHURTRACE_RNG_H

#include <cstdint>
#include <limits>
#include <random>

namespace schurtrace {

inline constexpr std::uint64_t kDefaultSeed = 20250101;

/// A reproducible random stream identified by (seed, stream_id).
///
/// The engine is std::mt19937_64 seeded through std::seed_seq, both of which
/// are specified bit-for-bit by the standard, and every derived quantity
/// (doubles, bounded integers) is computed here rather than through the
/// implementation-defined std distributions. Equal (seed, stream_id) therefore
/// gives equal draws on every conforming platform.
///
/// Trial t of an experiment uses stream_id = t; work inside a trial that may
/// run in parallel takes substream(i).
class RngStream {
  public:
    using result_type = std::uint64_t;

    RngStream(std::uint64_t seed, std::uint64_t stream_id);

    std::uint64_t seed() const {
        return seed_;
    }
    std::uint64_t stream_id() const {
        return stream_id_;
    }

    /// Independent child stream; the parent is left untouched.
    RngStream substream(std::uint64_t index) const;

    std::uint64_t next_u64() {
        return engine_();
    }
    /// Uniform on [0, 1) with 53 random bits.
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }
    /// Uniform on {0, ..., bound - 1}; bound >= 1. Unbiased (Lemire's method).
    std::uint64_t uniform_below(std::uint64_t bound);

    // UniformRandomBitGenerator, for library distributions that are
    // implemented in headers (and therefore portable).
    static constexpr result_type min() {
        return 0;
    }
    static constexpr result_type max() {
        return std::numeric_limits<result_type>::max();
    }
    result_type operator()() {
        return engine_();
    }

  private:
    std::uint64_t seed_;
    std::uint64_t stream_id_;
    std::mt19937_64 engine_;
};

}  // namespace schurtrace

#endif
