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

#ifndef TRACECODE_POWER_SUMS_HPP
#define TRACECODE_POWER_SUMS_HPP

#include <cstdint>
#include <vector>

#include "tracecode/trace_poly.hpp"

namespace tracecode {

// Power sums s_i = sum over roots beta of beta^i, as element codes.
// Indices 1..dense_limit are materialized; any index is served exactly via
// at() (per-root exponentiation past the dense range).
class PowerSumTable {
public:
    PowerSumTable() = default;
    PowerSumTable(const TraceDepPoly& poly, std::uint64_t dense_limit);

    const FieldCtxPtr& ctx() const { return ctx_; }
    std::uint64_t dense_limit() const { return dense_limit_; }

    // s_i for i >= 1 (i is reduced mod the group order with s_0 treated as
    // m mod p only through explicit index q^{2n}-1, not folded).
    std::uint32_t at(std::uint64_t i) const;

    // Indices 1 <= i <= bound with s_i != 0, ascending.  bound must not
    // exceed dense_limit.
    std::vector<std::uint64_t> nonzero_indices_up_to(std::uint64_t bound) const;

private:
    FieldCtxPtr ctx_;
    std::vector<std::uint64_t> root_logs_;
    std::uint64_t dense_limit_ = 0;
    std::vector<std::uint32_t> dense_;  // dense_[i] = s_i, index 0 unused
};

// Builds the table with s_1..s_up_to materialized by rolling per-root
// ladders.  Requires roots enumerated (root_logs present or the polynomial
// rootless).  The dropped zero root never contributes.
PowerSumTable power_sums(const TraceDepPoly& poly, std::uint64_t up_to);

// Single power sum without building a dense table.
std::uint32_t power_sum_at(const TraceDepPoly& poly, std::uint64_t i);

// One closed-form predicted nonzero power sum: s_index = sign (+1/-1 in the
// prime subfield).
struct El7Entry {
    std::uint64_t index = 0;
    int sign = +1;  // +1 or -1
};

struct El7Prediction {
    std::vector<El7Entry> entries;  // ascending index
    // True for the excluded triple (q, n, b) = (2, 2, 3): the closed form
    // still applies but the triple is barred from the Delta(tau) theorem.
    bool era2_excluded = false;
};

// Closed-form prediction of every index i <= m with s_i != 0 and its value,
// covering the generic regimes (1 < t < n; t = 1; t = n) and both
// exceptional cases (q = 2, n = 2, t = 1) and (q = t = n = 2).  Throws
// std::invalid_argument on a malformed triple.
El7Prediction predict_el7(std::uint64_t q, std::uint32_t n, std::uint32_t t);

// One Newton-identity violation (diagnostic; the expected count is zero).
struct NewtonViolation {
    std::uint64_t r = 0;
    std::uint32_t lhs = 0;  // value that should have been 0
};

struct NewtonReport {
    std::uint64_t r_max = 0;
    std::uint64_t checked = 0;
    std::vector<NewtonViolation> violations;  // capped at 32 entries
    bool ok() const { return violations.empty(); }
};

// Verifies both Newton identities for r = 1..r_max against the polynomial's
// sparse coefficients a_j (a_j = 0 off the support) and the power sums of
// its enumerated roots: for r <= m the identity includes the r * a_{m-r}
// term (r reduced mod p); for r > m the plain convolution vanishes.
// Requires Property (A) semantics: the roots listed are exactly the roots
// of the degree-m polynomial (checked: root count must equal degree).
NewtonReport verify_newton(const TraceDepPoly& poly, std::uint64_t r_max);

// Same verification for an arbitrary dense monic polynomial prod (X - beta)
// given by its coefficient codes (low-degree first, coeffs.size() = m + 1,
// leading 1) and its root logs; used by synthetic oracles.
NewtonReport verify_newton_dense(const FieldCtxPtr& ctx,
                                 const std::vector<std::uint32_t>& coeffs,
                                 const std::vector<std::uint64_t>& root_logs,
                                 std::uint64_t r_max);

}  // namespace tracecode

#endif  // TRACECODE_POWER_SUMS_HPP
