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

#include "schurtrace/schur.h"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace schurtrace {

namespace {

template <typename T>
std::vector<T> complete_homogeneous_impl(std::span<const T> values, int max_degree) {
    std::vector<T> h(static_cast<std::size_t>(max_degree) + 1, T(0));
    h[0] = T(1);
    // Multiply the generating series by 1/(1 - x t) one variable at a time.
    for (const T &x : values) {
        if (x == 0) {
            continue;
        }
        for (int k = 1; k <= max_degree; ++k) {
            h[k] += x * h[k - 1];
        }
    }
    return h;
}

// Fraction-free determinant of a square integer matrix (row-major, size m).
BigInt bareiss_determinant(std::vector<BigInt> a, int m) {
    auto at = [&](int i, int j) -> BigInt & { return a[static_cast<std::size_t>(i) * m + j]; };
    BigInt prev_pivot = 1;
    int sign = 1;
    for (int k = 0; k < m - 1; ++k) {
        if (at(k, k) == 0) {
            int swap_row = -1;
            for (int i = k + 1; i < m; ++i) {
                if (at(i, k) != 0) {
                    swap_row = i;
                    break;
                }
            }
            if (swap_row < 0) {
                return 0;
            }
            for (int j = 0; j < m; ++j) {
                std::swap(at(k, j), at(swap_row, j));
            }
            sign = -sign;
        }
        for (int i = k + 1; i < m; ++i) {
            for (int j = k + 1; j < m; ++j) {
                at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev_pivot;
            }
            at(i, k) = 0;
        }
        prev_pivot = at(k, k);
    }
    return sign > 0 ? at(m - 1, m - 1) : BigInt(-at(m - 1, m - 1));
}

void fill_ssyt(const Partition &lambda, const std::vector<Rational> &alpha, std::vector<std::vector<int>> &t,
               std::size_t row, int col, const Rational &weight, Rational &total) {
    const auto &rows = lambda.rows();
    if (row == rows.size()) {
        total += weight;
        return;
    }
    if (col == rows[row]) {
        fill_ssyt(lambda, alpha, t, row + 1, 0, weight, total);
        return;
    }
    int lo = 0;
    if (col > 0) {
        lo = std::max(lo, t[row][col - 1]);
    }
    if (row > 0) {
        lo = std::max(lo, t[row - 1][col] + 1);
    }
    for (int v = lo; v < static_cast<int>(alpha.size()); ++v) {
        if (alpha[v] == 0) {
            continue;
        }
        t[row][col] = v;
        fill_ssyt(lambda, alpha, t, row, col + 1, weight * alpha[v], total);
    }
}

}  // namespace

std::vector<Rational> complete_homogeneous(std::span<const Rational> values, int max_degree) {
    if (max_degree < 0) {
        throw std::invalid_argument("complete_homogeneous: negative degree");
    }
    return complete_homogeneous_impl<Rational>(values, max_degree);
}

Rational schur_poly(const Partition &lambda, const ExactSpectrum &alpha) {
    const int ell = lambda.length();
    if (ell > alpha.dimension()) {
        return 0;
    }
    if (ell == 0) {
        return 1;
    }
    BigInt common = 1;
    for (const auto &x : alpha.values()) {
        common = boost::multiprecision::lcm(common, denominator(x));
    }
    std::vector<BigInt> weights;
    weights.reserve(alpha.values().size());
    for (const auto &x : alpha.values()) {
        weights.push_back(numerator(x) * (common / denominator(x)));
    }
    const int max_degree = lambda.row(0) + ell - 1;
    auto h = complete_homogeneous_impl<BigInt>(std::span<const BigInt>(weights), max_degree);

    std::vector<BigInt> jt(static_cast<std::size_t>(ell) * ell);
    for (int i = 0; i < ell; ++i) {
        for (int j = 0; j < ell; ++j) {
            int k = lambda.row(i) - i + j;
            jt[static_cast<std::size_t>(i) * ell + j] = k < 0 ? BigInt(0) : h[k];
        }
    }
    BigInt det = bareiss_determinant(std::move(jt), ell);
    return Rational(det, boost::multiprecision::pow(common, static_cast<unsigned>(lambda.size())));
}

Rational schur_ssyt_oracle(const Partition &lambda, const ExactSpectrum &alpha) {
    if (lambda.size() > kSsytOracleMaxBoxes || alpha.dimension() > kSsytOracleMaxDim) {
        throw std::length_error("schur_ssyt_oracle: guarded to n <= 10 and d <= 5");
    }
    std::vector<std::vector<int>> t;
    for (int r : lambda.rows()) {
        t.emplace_back(static_cast<std::size_t>(r), 0);
    }
    Rational total = 0;
    fill_ssyt(lambda, alpha.values(), t, 0, 0, Rational(1), total);
    return total;
}

Rational schur_uniform(const Partition &lambda, int d) {
    if (d < 1) {
        throw std::invalid_argument("schur_uniform: d must be >= 1");
    }
    if (lambda.length() > d) {
        return 0;
    }
    auto hooks = hook_lengths(lambda);
    BigInt num = 1;
    BigInt den = 1;
    std::size_t cell = 0;
    for (int i = 0; i < lambda.length(); ++i) {
        for (int j = 0; j < lambda.row(i); ++j) {
            num *= d + j - i;
            den *= hooks[cell++];
        }
    }
    den *= boost::multiprecision::pow(BigInt(d), static_cast<unsigned>(lambda.size()));
    return Rational(num, den);
}

double schur_poly_float(const Partition &lambda, std::span<const double> alpha) {
    const int ell = lambda.length();
    if (ell > static_cast<int>(alpha.size())) {
        return 0.0;
    }
    if (ell == 0) {
        return 1.0;
    }
    auto h = complete_homogeneous_impl<double>(alpha, lambda.row(0) + ell - 1);
    std::vector<double> a(static_cast<std::size_t>(ell) * ell);
    for (int i = 0; i < ell; ++i) {
        for (int j = 0; j < ell; ++j) {
            int k = lambda.row(i) - i + j;
            a[static_cast<std::size_t>(i) * ell + j] = k < 0 ? 0.0 : h[k];
        }
    }
    double det = 1.0;
    for (int k = 0; k < ell; ++k) {
        int pivot = k;
        for (int i = k + 1; i < ell; ++i) {
            if (std::abs(a[i * ell + k]) > std::abs(a[pivot * ell + k])) {
                pivot = i;
            }
        }
        if (a[pivot * ell + k] == 0.0) {
            return 0.0;
        }
        if (pivot != k) {
            for (int j = 0; j < ell; ++j) {
                std::swap(a[k * ell + j], a[pivot * ell + j]);
            }
            det = -det;
        }
        det *= a[k * ell + k];
        for (int i = k + 1; i < ell; ++i) {
            double f = a[i * ell + k] / a[k * ell + k];
            for (int j = k + 1; j < ell; ++j) {
                a[i * ell + j] -= f * a[k * ell + j];
            }
        }
    }
    return det;
}

}  // namespace schurtrace
