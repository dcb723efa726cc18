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

#ifndef TRACECODE_QUANTUM_HPP
#define TRACECODE_QUANTUM_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "tracecode/eval_code.hpp"

namespace tracecode {

// Stabilizer-code parameters [[n, k, d]]_q with a lower-bound or exact
// distance flag and a human-readable derivation chain.
struct QuantumParams {
    std::uint64_t n = 0;
    std::uint64_t k = 0;
    std::uint64_t d = 1;
    bool d_exact = false;  // false: d is a lower bound
    std::uint64_t q = 0;   // alphabet, a prime power
    std::vector<std::string> derivation;

    // {"n":., "k":., "d":., "d_kind":"exact"|"lower", "q":., "derivation":[...]}
    nlohmann::json to_json() const;
};

// [[n, n-2k, >= d_bound]]_Q from a Hermitian self-orthogonal [n, k] code
// over GF(Q^2).  Requires 2k <= n.  The degenerate k == 0 gives
// [[n, n, >= 1]].  `step` is appended to the derivation chain.
QuantumParams stabilizer_from_so(std::uint64_t n, std::uint64_t k,
                                 std::uint64_t d_bound, std::uint64_t Q,
                                 const std::string& step);

// Base-field expansion: a Hermitian self-orthogonal (conjugation x -> x^{q^r})
// [n, k] code over GF(q^{2r}) yields [[r n, r n - 2 r k, >= d]]_q, d the
// code's dual-distance bound (or 1 when absent).  Validates that the
// certificate is a passing one for conj_power q^r and that the code's entry
// field has degree 2r over GF(q).  Throws std::invalid_argument otherwise.
QuantumParams expand_basefield(const EvalCode& code, std::uint32_t r,
                               const SOCertificate& cert);

// Propagation rules: [[n, k-1, >= d]]_q (only when k >= 1) and
// [[n+1, k, d]]_q, each with the derivation chain extended.
std::vector<QuantumParams> propagate(const QuantumParams& p);

// Largest d such that the exact Feng-Ma existence inequality
//   (q^{n-k+2} - 1) / (q^2 - 1)  >  sum_{i=1}^{d-1} C(n, i) (q^2 - 1)^{i-1}
// guarantees an [[n, k, d]]_q code; 1 when even d = 2 is not guaranteed.
// Exact big-integer arithmetic throughout.  Requires n > k.
std::uint64_t gv_max_d(std::uint64_t q, std::uint64_t n, std::uint64_t k);

// Whether the Feng-Ma inequality asserts existence of an [[n, k, d]]_q code.
bool feng_ma_exists(std::uint64_t q, std::uint64_t n, std::uint64_t k,
                    std::uint64_t d);

// True iff p's distance strictly beats the largest GV-guaranteed distance
// for its (n, k, q); d <= 1 is vacuously true.  Requires n > k for d >= 2.
bool exceeds_gv(const QuantumParams& p);

}  // namespace tracecode

#endif  // TRACECODE_QUANTUM_HPP
