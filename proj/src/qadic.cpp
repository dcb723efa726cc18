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

#include "tracecode/qadic.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "tracecode/field.hpp"

namespace tracecode {

std::vector<std::uint32_t> qadic_expand(std::uint64_t k, std::uint64_t q,
                                        std::uint32_t width) {
    if (q < 2) throw std::invalid_argument("qadic_expand: base must be >= 2");
    std::vector<std::uint32_t> digits(width, 0);
    std::uint64_t rest = k;
    for (std::uint32_t i = 0; i < width; ++i) {
        digits[i] = static_cast<std::uint32_t>(rest % q);
        rest /= q;
    }
    if (rest != 0) {
        throw std::invalid_argument("qadic_expand: k does not fit the width");
    }
    return digits;
}

std::vector<std::uint64_t> shift_orbit(std::uint64_t b, std::uint64_t q,
                                       std::uint64_t N) {
    if (q < 2) throw std::invalid_argument("shift_orbit: base must be >= 2");
    if (b == 0 || b >= N) {
        throw std::invalid_argument("shift_orbit: need 0 < b < N");
    }
    std::vector<std::uint64_t> orbit;
    std::unordered_set<std::uint64_t> seen;
    std::uint64_t x = b;
    while (seen.insert(x).second) {
        orbit.push_back(x);
        x = static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(x) * q) % N);
    }
    return orbit;
}

std::vector<std::uint64_t> support_of_trb(std::uint64_t q, std::uint32_t n,
                                          std::uint32_t t) {
    if (q < 2 || n == 0 || t == 0 || t > n) {
        throw std::invalid_argument("support_of_trb: need q >= 2, 0 < t <= n");
    }
    // All members stay below q^{2n} - 1, so everything must fit u64.
    const std::uint64_t q2n =
        checked_pow_u64(q, 2 * n, ~std::uint64_t{0});
    const std::uint64_t qt = checked_pow_u64(q, t, q2n);
    const std::uint64_t b = qt + 1;

    std::vector<std::uint64_t> support;
    support.push_back(0);
    // Geometric run q^j * b for 0 <= j <= 2n - t - 1; the largest member is
    // q^{2n-t-1} (q^t + 1) = q^{2n-1} + q^{2n-t-1} < q^{2n} - 1.
    std::uint64_t e = b;
    for (std::uint32_t j = 0; j + t < 2 * n; ++j) {
        support.push_back(e);
        e *= q;
    }
    // Wrapped terms q^{j-1} (1 + q^{2n-t}) for 1 <= j <= t (absent at t = n,
    // where the trace halves and the run above is the whole support).
    if (t < n) {
        const std::uint64_t base = 1 + q2n / qt;  // 1 + q^{2n-t}
        std::uint64_t k = base;
        for (std::uint32_t j = 1; j <= t; ++j) {
            support.push_back(k);
            k *= q;
        }
    }
    std::sort(support.begin(), support.end());
    return support;
}

}  // namespace tracecode
