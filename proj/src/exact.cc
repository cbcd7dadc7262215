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

#include "schurtrace/exact.h"

#include <cctype>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace schurtrace {

std::string to_pq_string(const Rational &value) {
    return numerator(value).str() + "/" + denominator(value).str();
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

// cpp_int reads a leading 0 as an octal prefix, so strip it first.
BigInt from_decimal_digits(std::string_view digits) {
    std::size_t first = digits.find_first_not_of('0');
    return first == std::string_view::npos ? BigInt(0) : BigInt{std::string(digits.substr(first))};
}

BigInt parse_integer(std::string_view s) {
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) {
        throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
    }
    BigInt v = from_decimal_digits(s);
    return negative ? BigInt(-v) : v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
        text.remove_prefix(1);
    }
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
        text.remove_suffix(1);
    }
    if (text.empty()) {
        throw std::invalid_argument("empty rational literal");
    }
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        BigInt p = parse_integer(text.substr(0, slash));
        BigInt q = parse_integer(text.substr(slash + 1));
        if (q == 0) {
            throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        }
        return Rational(p, q);
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view whole = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        bool negative = !whole.empty() && whole.front() == '-';
        if (!whole.empty() && (whole.front() == '-' || whole.front() == '+')) {
            whole.remove_prefix(1);
        }
        if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
            (!frac.empty() && !all_digits(frac))) {
            throw std::invalid_argument("not a decimal literal: '" + std::string(text) + "'");
        }
        BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac.size()));
        BigInt digits = from_decimal_digits(std::string(whole) + std::string(frac));
        Rational r(digits, scale);
        return negative ? Rational(-r) : r;
    }
    return Rational(parse_integer(text));
}

double to_double(const Rational &value) {
    return value.convert_to<double>();
}

BigInt factorial(int n) {
    if (n < 0) {
        throw std::invalid_argument("factorial of a negative number");
    }
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) {
        r *= i;
    }
    return r;
}

std::int64_t ceil_snapped(double x) {
    if (!std::isfinite(x) || x > 9.0e18) {
        throw std::overflow_error("parameter does not fit a 64-bit count");
    }
    double r = std::round(x);
    if (std::abs(x - r) <= 1e-9 * std::max(1.0, std::abs(x))) {
        return static_cast<std::int64_t>(r);
    }
    return static_cast<std::int64_t>(std::ceil(x));
}

}  // namespace schurtrace
