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

#ifndef SCHURTRACE_SAMPLING_H
#define SCHURTRACE_SAMPLING_H

#include <cstdint>
#include <span>
#include <vector>

#include "schurtrace/partition.h"
#include "schurtrace/rng.h"
#include "schurtrace/spectrum.h"

namespace schurtrace {

/// Shape of the Robinson-Schensted insertion tableau of a word with letters >= 1.
/// The first row is the longest weakly increasing subsequence.
Partition rs_shape(std::span<const int> word);

/// How a Schur-Weyl draw is realized. Both realizations are exact.
enum class SwMethod {
    /// Pick per call from the spectrum and n (see SchurWeylSampler::method_for).
    Auto,
    /// Row-insert n i.i.d. letters drawn from the spectrum; keep only the shape.
    Rsk,
    /// Rejection from a multinomial proposal on the shifted shape l = lambda + delta.
    /// Needs the positive entries to be pairwise distinct and at most
    /// kChamberMaxRank of them; cost does not grow with n.
    ChamberRejection,
};

inline constexpr int kChamberMaxRank = 5;

/// Draws lambda ~ SW^n(alpha) for a fixed spectrum.
///
/// This is the only handle the estimators get on a state: they may ask for
/// its dimension and for weak-Schur-sampling outcomes, never for the spectrum.
class SchurWeylSampler {
  public:
    explicit SchurWeylSampler(const Spectrum &alpha, SwMethod method = SwMethod::Auto);

    int dimension() const {
        return dimension_;
    }

    /// One draw; at most rank(alpha) <= d rows.
    Partition draw(int n, RngStream &rng) const;

    /// The realization draw(n, ...) uses. Auto picks the chamber sampler when it
    /// applies and its expected proposal count is cheaper than inserting n letters.
    SwMethod method_for(int n) const;

  private:
    Partition draw_rsk(int n, RngStream &rng) const;
    Partition draw_chamber(int n, RngStream &rng) const;
    int sample_letter(RngStream &rng) const;

    int dimension_;
    SwMethod method_;
    std::vector<double> positive_;  // positive entries, non-increasing
    std::vector<double> cdf_;
    bool chamber_ok_ = false;
    double log_vandermonde_ = 0;
    // Per permutation sigma of the positive entries: sign and log(alpha_sigma(j) / alpha_j).
    std::vector<int> perm_sign_;
    std::vector<std::vector<double>> perm_log_ratio_;
};

/// lambda ~ SW^n(alpha).
Partition sample_sw(const Spectrum &alpha, int n, RngStream &rng, SwMethod method = SwMethod::Auto);

/// lambda ~ Planch(n): shape of the insertion tableau of a uniform permutation.
Partition sample_planch(int n, RngStream &rng);

}  // namespace schurtrace

#endif
