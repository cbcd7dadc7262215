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

#ifndef SCHURTRACE_SCHUR_H
#define SCHURTRACE_SCHUR_H

#include <span>
#include <vector>

#include "schurtrace/exact.h"
#include "schurtrace/partition.h"
#include "schurtrace/spectrum.h"

namespace schurtrace {

/// Complete homogeneous symmetric polynomials h_0..h_max_degree evaluated at values.
std::vector<Rational> complete_homogeneous(std::span<const Rational> values, int max_degree);

/// Schur polynomial s_lambda(alpha), exactly, via the Jacobi-Trudi determinant
/// det(h_{lambda_i - i + j}). Zero when lambda has more rows than alpha has entries.
///
/// The spectrum is brought to a common denominator D so that every h_k is an
/// integer over D^k; the determinant is then taken over integers with Bareiss
/// elimination and divided by D^n once at the end.
Rational schur_poly(const Partition &lambda, const ExactSpectrum &alpha);

/// Brute-force sum of alpha^weight over all semistandard tableaux of shape lambda.
/// Guarded to n <= 10 and d <= 5; throws std::length_error outside that range.
Rational schur_ssyt_oracle(const Partition &lambda, const ExactSpectrum &alpha);

inline constexpr int kSsytOracleMaxBoxes = 10;
inline constexpr int kSsytOracleMaxDim = 5;

/// s_lambda(1/d, ..., 1/d) from the hook-content formula.
Rational schur_uniform(const Partition &lambda, int d);

/// Binary64 Jacobi-Trudi evaluation. Only for large-d sanity output; exact checks
/// never go through here.
double schur_poly_float(const Partition &lambda, std::span<const double> alpha);

}  // namespace schurtrace

#endif
