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

#ifndef SCHURTRACE_SPECTRUM_H
#define SCHURTRACE_SPECTRUM_H

#include <span>
#include <vector>

#include "schurtrace/exact.h"

namespace schurtrace {

/// Sorted eigenvalues of a d-dimensional state in binary64, used by the
/// Monte-Carlo paths. Non-increasing, non-negative, summing to 1 within 1e-12.
class Spectrum {
  public:
    /// Throws std::invalid_argument if the values are not a sorted probability vector.
    explicit Spectrum(std::vector<double> values);

    /// rank entries of 1/rank followed by dim - rank zeros.
    static Spectrum uniform(int rank, int dim);
    static Spectrum uniform(int rank) {
        return uniform(rank, rank);
    }
    /// alpha_j proportional to j^{-exponent}, j = 1..dim.
    static Spectrum zipf(int dim, double exponent);

    const std::vector<double> &values() const {
        return values_;
    }
    int dimension() const {
        return static_cast<int>(values_.size());
    }
    double operator[](std::size_t j) const {
        return values_[j];
    }

  private:
    std::vector<double> values_;
};

/// Exact-rational spectrum for the combinatorial oracle. The sum must be exactly 1.
class ExactSpectrum {
  public:
    explicit ExactSpectrum(std::vector<Rational> values);

    static ExactSpectrum uniform(int rank, int dim);
    static ExactSpectrum uniform(int rank) {
        return uniform(rank, rank);
    }

    const std::vector<Rational> &values() const {
        return values_;
    }
    int dimension() const {
        return static_cast<int>(values_.size());
    }
    /// Number of strictly positive entries.
    int rank() const;
    /// True when every positive entry is equal (a maximally mixed state on its support).
    bool is_uniform_on_support() const;

    Spectrum to_double() const;

  private:
    std::vector<Rational> values_;
};

}  // namespace schurtrace

#endif
