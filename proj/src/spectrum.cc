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

#include "schurtrace/spectrum.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace schurtrace {

Spectrum::Spectrum(std::vector<double> values) : values_(std::move(values)) {
    if (values_.empty()) {
        throw std::invalid_argument("spectrum must have at least one entry");
    }
    // Neumaier summation, so long uniform vectors do not drift past the tolerance.
    double sum = 0;
    double carry = 0;
    for (std::size_t j = 0; j < values_.size(); ++j) {
        if (!std::isfinite(values_[j]) || values_[j] < 0) {
            throw std::invalid_argument("spectrum entries must be finite and non-negative");
        }
        if (j > 0 && values_[j] > values_[j - 1]) {
            throw std::invalid_argument("spectrum must be sorted non-increasing");
        }
        double t = sum + values_[j];
        carry += std::abs(sum) >= values_[j] ? (sum - t) + values_[j] : (values_[j] - t) + sum;
        sum = t;
    }
    sum += carry;
    if (std::abs(sum - 1.0) > 1e-12) {
        throw std::invalid_argument("spectrum must sum to 1 (got " + std::to_string(sum) + ")");
    }
}

Spectrum Spectrum::uniform(int rank, int dim) {
    if (rank < 1 || dim < rank) {
        throw std::invalid_argument("uniform spectrum needs 1 <= rank <= dim");
    }
    std::vector<double> v(static_cast<std::size_t>(dim), 0.0);
    for (int j = 0; j < rank; ++j) {
        v[j] = 1.0 / rank;
    }
    return Spectrum(std::move(v));
}

Spectrum Spectrum::zipf(int dim, double exponent) {
    if (dim < 1 || !(exponent >= 0)) {
        throw std::invalid_argument("zipf spectrum needs dim >= 1 and exponent >= 0");
    }
    std::vector<double> v(static_cast<std::size_t>(dim));
    double z = 0;
    for (int j = 0; j < dim; ++j) {
        v[j] = std::pow(j + 1.0, -exponent);
        z += v[j];
    }
    for (double &x : v) {
        x /= z;
    }
    return Spectrum(std::move(v));
}

ExactSpectrum::ExactSpectrum(std::vector<Rational> values) : values_(std::move(values)) {
    if (values_.empty()) {
        throw std::invalid_argument("spectrum must have at least one entry");
    }
    Rational sum = 0;
    for (std::size_t j = 0; j < values_.size(); ++j) {
        if (values_[j] < 0) {
            throw std::invalid_argument("spectrum entries must be non-negative");
        }
        if (j > 0 && values_[j] > values_[j - 1]) {
            throw std::invalid_argument("spectrum must be sorted non-increasing");
        }
        sum += values_[j];
    }
    if (sum != 1) {
        throw std::invalid_argument("exact spectrum must sum to exactly 1 (got " +
                                    to_pq_string(sum) + ")");
    }
}

ExactSpectrum ExactSpectrum::uniform(int rank, int dim) {
    if (rank < 1 || dim < rank) {
        throw std::invalid_argument("uniform spectrum needs 1 <= rank <= dim");
    }
    std::vector<Rational> v(static_cast<std::size_t>(dim), Rational(0));
    for (int j = 0; j < rank; ++j) {
        v[j] = Rational(1, rank);
    }
    return ExactSpectrum(std::move(v));
}

int ExactSpectrum::rank() const {
    int r = 0;
    for (const auto &x : values_) {
        r += x > 0 ? 1 : 0;
    }
    return r;
}

bool ExactSpectrum::is_uniform_on_support() const {
    for (const auto &x : values_) {
        if (x != 0 && x != values_.front()) {
            return false;
        }
    }
    return true;
}

Spectrum ExactSpectrum::to_double() const {
    std::vector<double> v;
    v.reserve(values_.size());
    for (const auto &x : values_) {
        v.push_back(schurtrace::to_double(x));
    }
    // Rounding each entry independently keeps the sum within a few ulps of 1.
    return Spectrum(std::move(v));
}

}  // namespace schurtrace
