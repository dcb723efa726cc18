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

#ifndef TRACECODE_EVAL_CODE_HPP
#define TRACECODE_EVAL_CODE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include <json.hpp>

#include "tracecode/matrix.hpp"
#include "tracecode/trace_poly.hpp"

namespace tracecode {

// A linear code presented by a generator matrix whose entries live in the
// evaluation field F_{q^{2n}}.  The code itself is linear over the alphabet
// subfield GF(p^alphabet_pdeg) (the full field for plain evaluation codes, a
// proper subfield for subfield-subcodes); every generator entry lies in the
// alphabet subfield whenever the alphabet is proper.
struct EvalCode {
    FieldCtxPtr ctx;                 // field carrying the entries
    std::uint64_t q = 0;             // triple context
    std::uint32_t n = 0;
    std::vector<std::uint64_t> delta;  // defining exponent set, ascending
    Matrix gen;                      // one row per evaluated monomial / basis vector
    std::size_t length = 0;          // number of evaluation points
    std::size_t dim = 0;             // exact rank of gen over the alphabet
    std::uint32_t alphabet_pdeg = 0; // alphabet = GF(p^alphabet_pdeg)
    // d(C^perp_h) >= this, when a construction provides one.
    std::optional<std::uint64_t> dual_distance_bound;
    nlohmann::json provenance;       // construction tag + defining data

    std::uint64_t alphabet_order() const;
};

// The tau cap A(q, t) of the self-orthogonality theorem (five branches).
// Throws std::invalid_argument when t == 0 or t > n.
std::uint64_t a_bound(std::uint64_t q, std::uint32_t n, std::uint32_t t);

// Exponent set Delta(tau) = {0, 1, ..., tau}.
std::vector<std::uint64_t> delta_tau(std::uint64_t tau);

// Builds the evaluation code with generator rows ev(X^i) = (beta_1^i, ...,
// beta_m^i) for i in delta (exponents reduced mod q^{2n}-1).  Requires
// enumerated roots, a nonempty delta, and no dropped zero root (evaluating
// X^i at 0 is ill-defined for reduced exponents).  Throws
// std::invalid_argument otherwise.
EvalCode build_eval_code(const TraceDepPoly& poly,
                         const std::vector<std::uint64_t>& delta);

// Hermitian product sum_i x_i * y_i^conj_power (conj_power = 1 degenerates
// to the Euclidean product).  Lengths must match.
std::uint32_t hermitian_product(const FieldCtx& ctx,
                                const std::vector<std::uint32_t>& x,
                                const std::vector<std::uint32_t>& y,
                                std::uint64_t conj_power);

// Outcome of the full pairwise Gram check of check_self_orthogonal.
struct SOCertificate {
    std::uint64_t conj_power = 0;  // the power q^r defining the form
    bool gram_zero = false;
    // First failing row pair and its Gram value when gram_zero is false.
    std::size_t witness_i = 0, witness_j = 0;
    std::uint32_t witness_value = 0;
};

// Full Gram computation G * sigma(G)^T with sigma: y -> y^conj_power; no
// sampling.  gram_zero is true iff every entry vanishes.
SOCertificate check_self_orthogonal(const EvalCode& code,
                                    std::uint64_t conj_power);

enum class DistanceStatus {
    kCertified,    // every (delta-1)-column subset checked independent
    kSampledOnly,  // random subsets only; no witness found
    kRefuted,      // an explicitly dependent column subset found
};

struct DistanceCertificate {
    DistanceStatus status = DistanceStatus::kSampledOnly;
    std::uint32_t delta_target = 0;
    std::uint64_t subsets_checked = 0;
    bool exhaustive = false;
    // Dependent column set when status == kRefuted.
    std::vector<std::size_t> witness_columns;
};

// Certifies d(C^perp_h) >= delta_target by checking that every
// (delta_target - 1)-column subset of the generator matrix has full column
// rank.  Column independence is invariant under the coordinatewise
// Frobenius, so the Euclidean test certifies the Hermitian dual as well.
// Exhaustive when C(length, delta_target - 1) <= budget; otherwise `trials`
// uniform random subsets (never Certified from samples).  delta_target >= 2.
DistanceCertificate certify_dual_distance(const EvalCode& code,
                                          std::uint32_t delta_target,
                                          std::uint64_t budget = 2'000'000,
                                          std::uint32_t trials = 64,
                                          std::uint64_t seed = 0x7261636543ULL);

// Exact minimum weight by enumerating all alphabet_order()^dim messages.
// Throws std::invalid_argument when dim == 0 or the message space exceeds
// the cap.
std::uint64_t true_min_distance(const EvalCode& code,
                                std::uint64_t cap = std::uint64_t{1} << 24);

}  // namespace tracecode

#endif  // TRACECODE_EVAL_CODE_HPP
