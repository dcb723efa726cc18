/*
 * Copyright 2026 The tracecode authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef TRACECODE_QADIC_HPP
#define TRACECODE_QADIC_HPP

#include <cstdint>
#include <vector>

namespace tracecode {

// Base-q digits of k, least significant first, padded to exactly `width`
// digits.  Requires q >= 2 and k < q^width (std::invalid_argument
// otherwise; the power check is overflow-safe).
std::vector<std::uint32_t> qadic_expand(std::uint64_t k, std::uint64_t q,
                                        std::uint32_t width);

// The orbit of b under multiplication by q modulo N, in first-occurrence
// order: b, qb, q^2 b, ... (mod N), stopping before the first repeat.
// Requires 0 < b < N and q >= 2.
std::vector<std::uint64_t> shift_orbit(std::uint64_t b, std::uint64_t q,
                                       std::uint64_t N);

// Exponent support of the b-th trace-depending polynomial for the triple
// (q, n, b) with b = q^t + 1, 1 <= t <= n: the constant term 0, the
// geometric run q^j * b for 0 <= j <= 2n - t - 1, and, when t < n, the
// wrapped exponents q^(j-1) * (1 + q^(2n - t)) for 1 <= j <= t.  Returned
// sorted ascending; all values are below N = q^(2n) - 1, so no modular
// reduction occurs.  Throws std::invalid_argument on a malformed triple and
// std::overflow_error when q^(2n) does not fit std::uint64_t.
std::vector<std::uint64_t> support_of_trb(std::uint64_t q, std::uint32_t n,
                                          std::uint32_t t);

}  // namespace tracecode

#endif  // TRACECODE_QADIC_HPP
