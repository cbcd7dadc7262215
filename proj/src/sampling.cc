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

#include "schurtrace/sampling.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <boost/random/binomial_distribution.hpp>

namespace schurtrace {

namespace {

// Row insertion keeping each row as a sorted vector. Works for any alphabet.
class VectorRowsInserter {
  public:
    void insert(int x) {
        for (auto &row : rows_) {
            auto it = std::upper_bound(row.begin(), row.end(), x);
            if (it == row.end()) {
                row.push_back(x);
                return;
            }
            std::swap(*it, x);
        }
        rows_.push_back({x});
    }
    std::vector<int> row_lengths() const {
        std::vector<int> out;
        out.reserve(rows_.size());
        for (const auto &row : rows_) {
            out.push_back(static_cast<int>(row.size()));
        }
        return out;
    }

  private:
    std::vector<std::vector<int>> rows_;
};

// Row insertion for alphabets {0..63}: row r is a letter-count vector plus a
// bitmask of letters present, so finding the bumped letter is one ctz.
class CountRowsInserter {
  public:
    explicit CountRowsInserter(int alphabet)
        : alphabet_(alphabet),
          counts_(static_cast<std::size_t>(alphabet) * alphabet, 0),
          masks_(static_cast<std::size_t>(alphabet), 0),
          lengths_(static_cast<std::size_t>(alphabet), 0) {
    }

    void insert(int x) {
        // Row r only ever holds letters >= r, so at most `alphabet_` rows are used.
        for (int r = 0;; ++r) {
            std::uint64_t above = x >= 63 ? 0 : (~std::uint64_t{0} << (x + 1));
            std::uint64_t candidates = masks_[r] & above;
            std::int64_t *row = &counts_[static_cast<std::size_t>(r) * alphabet_];
            if (candidates == 0) {
                ++row[x];
                masks_[r] |= std::uint64_t{1} << x;
                ++lengths_[r];
                return;
            }
            int y = std::countr_zero(candidates);
            if (--row[y] == 0) {
                masks_[r] &= ~(std::uint64_t{1} << y);
            }
            ++row[x];
            masks_[r] |= std::uint64_t{1} << x;
            x = y;
        }
    }
    std::vector<int> row_lengths() const {
        return {lengths_.begin(), lengths_.end()};
    }

  private:
    int alphabet_;
    std::vector<std::int64_t> counts_;
    std::vector<std::uint64_t> masks_;
    std::vector<std::int64_t> lengths_;
};

constexpr int kCountInserterMaxAlphabet = 64;

void check_n(int n) {
    if (n < 1) {
        throw std::invalid_argument("number of samples n must be >= 1");
    }
}

}  // namespace

Partition rs_shape(std::span<const int> word) {
    if (word.empty()) {
        throw std::invalid_argument("rs_shape: empty word");
    }
    VectorRowsInserter ins;
    for (int letter : word) {
        if (letter < 1) {
            throw std::invalid_argument("rs_shape: letters must be >= 1");
        }
        ins.insert(letter);
    }
    return Partition(ins.row_lengths());
}

SchurWeylSampler::SchurWeylSampler(const Spectrum &alpha, SwMethod method)
    : dimension_(alpha.dimension()), method_(method) {
    for (double a : alpha.values()) {
        if (a > 0) {
            positive_.push_back(a);
        }
    }
    cdf_.resize(positive_.size());
    std::partial_sum(positive_.begin(), positive_.end(), cdf_.begin());

    const int rank = static_cast<int>(positive_.size());
    chamber_ok_ = rank <= kChamberMaxRank;
    for (int i = 0; chamber_ok_ && i + 1 < rank; ++i) {
        chamber_ok_ = positive_[i] > positive_[i + 1];
    }
    if (chamber_ok_) {
        for (int i = 0; i < rank; ++i) {
            for (int j = i + 1; j < rank; ++j) {
                log_vandermonde_ += std::log(positive_[i] - positive_[j]);
            }
        }
        std::vector<int> perm(static_cast<std::size_t>(rank));
        std::iota(perm.begin(), perm.end(), 0);
        do {
            int inversions = 0;
            for (int i = 0; i < rank; ++i) {
                for (int j = i + 1; j < rank; ++j) {
                    inversions += perm[i] > perm[j] ? 1 : 0;
                }
            }
            perm_sign_.push_back(inversions % 2 == 0 ? 1 : -1);
            std::vector<double> ratio(static_cast<std::size_t>(rank));
            for (int j = 0; j < rank; ++j) {
                ratio[j] = std::log(positive_[perm[j]]) - std::log(positive_[j]);
            }
            perm_log_ratio_.push_back(std::move(ratio));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    if (method_ == SwMethod::ChamberRejection && !chamber_ok_) {
        throw std::invalid_argument(
            "chamber sampler needs pairwise-distinct positive eigenvalues and rank <= " +
            std::to_string(kChamberMaxRank));
    }
}

SwMethod SchurWeylSampler::method_for(int n) const {
    if (method_ != SwMethod::Auto) {
        return method_;
    }
    const int rank = static_cast<int>(positive_.size());
    if (!chamber_ok_ || rank < 2) {
        return SwMethod::Rsk;
    }
    // Expected proposals per accepted draw: (n!/N'!) * N'^k / V(alpha).
    const double k = rank * (rank - 1) / 2.0;
    const double shifted = static_cast<double>(n) + k;
    double log_proposals = std::lgamma(n + 1.0) - std::lgamma(shifted + 1.0) + k * std::log(shifted) -
                           log_vandermonde_;
    double per_proposal = rank * static_cast<double>(perm_sign_.size()) + 4.0 * rank;
    double chamber_cost = std::exp(log_proposals) * per_proposal;
    double rsk_cost = static_cast<double>(n) * (4.0 + rank);
    return chamber_cost < rsk_cost ? SwMethod::ChamberRejection : SwMethod::Rsk;
}

int SchurWeylSampler::sample_letter(RngStream &rng) const {
    double u = rng.uniform01() * cdf_.back();
    auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
    if (it == cdf_.end()) {
        --it;
    }
    return static_cast<int>(it - cdf_.begin());
}

Partition SchurWeylSampler::draw(int n, RngStream &rng) const {
    check_n(n);
    if (positive_.size() == 1) {
        return Partition({n});
    }
    return method_for(n) == SwMethod::ChamberRejection ? draw_chamber(n, rng) : draw_rsk(n, rng);
}

Partition SchurWeylSampler::draw_rsk(int n, RngStream &rng) const {
    const int alphabet = static_cast<int>(positive_.size());
    if (alphabet <= kCountInserterMaxAlphabet) {
        CountRowsInserter ins(alphabet);
        for (int t = 0; t < n; ++t) {
            ins.insert(sample_letter(rng));
        }
        return Partition::from_padded_rows(ins.row_lengths());
    }
    VectorRowsInserter ins;
    for (int t = 0; t < n; ++t) {
        ins.insert(sample_letter(rng));
    }
    return Partition(ins.row_lengths());
}

// With l_i = lambda_i + (D - i) and N' = n + D(D-1)/2, the Frobenius formula
// for f^lambda and the bialternant formula for s_lambda give
//
//   SW^n(alpha)[lambda] = (n!/N'!) * Delta(l)/V(alpha) * Mult(N', alpha)[l] * B(l),
//   B(l) = sum_sigma sgn(sigma) prod_j (alpha_sigma(j)/alpha_j)^{l_j},
//
// where Delta and V are Vandermonde products. B is the probability that the
// alpha-random walk started at l never leaves the Weyl chamber, so B is in [0, 1],
// and Delta(l) <= N'^k. Proposing l from the multinomial and accepting with
// probability Delta(l) B(l) / N'^k therefore samples SW^n(alpha) exactly.
Partition SchurWeylSampler::draw_chamber(int n, RngStream &rng) const {
    const int rank = static_cast<int>(positive_.size());
    const std::int64_t shifted = static_cast<std::int64_t>(n) + rank * (rank - 1) / 2;
    const double inv_shifted = 1.0 / static_cast<double>(shifted);
    std::vector<std::int64_t> l(static_cast<std::size_t>(rank));
    for (;;) {
        std::int64_t remaining = shifted;
        double mass = 1.0;
        for (int j = 0; j + 1 < rank; ++j) {
            double p = std::clamp(positive_[j] / mass, 0.0, 1.0);
            boost::random::binomial_distribution<std::int64_t, double> binom(remaining, p);
            l[j] = remaining > 0 ? binom(rng) : 0;
            remaining -= l[j];
            mass -= positive_[j];
        }
        l[rank - 1] = remaining;

        double accept = 1.0;
        for (int i = 0; i < rank && accept > 0; ++i) {
            for (int j = i + 1; j < rank; ++j) {
                if (l[i] <= l[j]) {
                    accept = 0;
                    break;
                }
                accept *= static_cast<double>(l[i] - l[j]) * inv_shifted;
            }
        }
        if (accept == 0) {
            continue;
        }
        double survival = 0;
        for (std::size_t s = 0; s < perm_sign_.size(); ++s) {
            double e = 0;
            for (int j = 0; j < rank; ++j) {
                e += static_cast<double>(l[j]) * perm_log_ratio_[s][j];
            }
            survival += perm_sign_[s] * std::exp(e);
        }
        if (survival > 1.0 + 1e-9) {
            throw std::logic_error("chamber sampler: survival weight above 1");
        }
        accept *= std::clamp(survival, 0.0, 1.0);
        if (rng.uniform01() < accept) {
            std::vector<int> rows(static_cast<std::size_t>(rank));
            for (int i = 0; i < rank; ++i) {
                rows[i] = static_cast<int>(l[i] - (rank - 1 - i));
            }
            return Partition::from_padded_rows(std::move(rows));
        }
    }
}

Partition sample_sw(const Spectrum &alpha, int n, RngStream &rng, SwMethod method) {
    return SchurWeylSampler(alpha, method).draw(n, rng);
}

Partition sample_planch(int n, RngStream &rng) {
    check_n(n);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    for (int i = n - 1; i > 0; --i) {
        auto j = static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(i) + 1));
        std::swap(perm[i], perm[j]);
    }
    return rs_shape(perm);
}

}  // namespace schurtrace
