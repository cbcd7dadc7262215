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

#ifndef SCHURTRACE_EXACT_H
#define SCHURTRACE_EXACT_H

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace schurtrace {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Serializes as "p/q" with q > 0. Integers keep the denominator ("1/1", "0/1").
std::string to_pq_string(const Rational &value);

/// Parses "p/q", an integer, or a plain decimal literal ("0.3" -> 3/10) exactly.
/// Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

double to_double(const Rational &value);

BigInt factorial(int n);

/// Smallest integer >= x, treating x within a relative 1e-9 of an integer as that integer.
/// Parameter formulas like ceil(1/(0.12/6)) land a few ulps above the intended integer.
std::int64_t ceil_snapped(double x);

}  // namespace schurtrace

#endif
