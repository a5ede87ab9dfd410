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

#include "symbreak/bigint.h"

#include <cctype>

#include "symbreak/errors.h"

namespace symbreak {

BigInt Binomial(int64_t n, int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (int64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

BigInt Factorial(int64_t n) {
  if (n < 0) return 0;
  BigInt result = 1;
  for (int64_t i = 2; i <= n; ++i) result *= i;
  return result;
}

BigInt Power(int64_t base, int64_t exponent) {
  BigInt result = 1;
  BigInt b = base;
  for (; exponent > 0; exponent >>= 1) {
    if (exponent & 1) result *= b;
    b *= b;
  }
  return result;
}

BigInt ParseDecimal(const std::string& text) {
  if (text.empty()) throw ParseError("empty integer literal");
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError("not a decimal integer: '" + text + "'");
    }
  }
  return BigInt(text);
}

}  // namespace symbreak
