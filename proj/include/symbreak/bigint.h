// Copyright 2026 The symbreak Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SYMBREAK_BIGINT_H_
#define SYMBREAK_BIGINT_H_

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace symbreak {

using BigInt = boost::multiprecision::cpp_int;

// C(n, k); zero outside 0 <= k <= n.
BigInt Binomial(int64_t n, int64_t k);

// n!; zero for negative n so that terms like (k-2)! vanish for k < 2.
BigInt Factorial(int64_t n);

BigInt Power(int64_t base, int64_t exponent);

inline std::string ToDecimal(const BigInt& value) { return value.str(); }

// Throws ParseError unless `text` is a non-negative decimal integer.
BigInt ParseDecimal(const std::string& text);

}  // namespace symbreak

#endif  // SYMBREAK_BIGINT_H_
