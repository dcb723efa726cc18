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

#ifndef TRACECODE_SUBFIELD_HPP
#define TRACECODE_SUBFIELD_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "tracecode/eval_code.hpp"
#include "tracecode/trace_poly.hpp"

namespace tracecode {

// Cyclotomic cosets of Z / (q^{2n} - 1) under multiplication by q^{2n'}.
struct CosetSystem {
    std::uint64_t q = 0;
    std::uint32_t n = 0, n_prime = 0;
    std::uint64_t modulus = 0;    // q^{2n} - 1
    std::uint64_t multiplier = 0; // q^{2n'}
    // cosets[i] is sorted ascending; cosets are ordered by their minima, so
    // cosets[i].front() == min_reps[i].
    std::vector<std::vector<std::uint64_t>> cosets;
    std::vector<std::uint64_t> min_reps;  // g_0 = 0 < g_1 < ... < g_omega

    // Index into cosets of the coset containing x.
    std::size_t coset_index_of(std::uint64_t x) const;
};

// Builds the full partition.  Requires n' | n and n' < n (the system is
// only used for proper subfields).  Throws std::invalid_argument otherwise.
CosetSystem coset_system(std::uint64_t q, std::uint32_t n,
                         std::uint32_t n_prime);

// Exact rational with sign on the numerator; used for the non-integral
// C(q, t) bound.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;  // > 0

    std::int64_t floor_value() const;
    // Comparison against an integer, exact.
    bool operator<(std::int64_t v) const { return num < v * den; }
    bool greater_than(std::int64_t v) const { return num > v * den; }
};

// The bound family of the subfield-subcode self-orthogonality theorem.
struct BoundSet {
    std::uint64_t a = 0;   // A(q, t)
    std::int64_t b = 0;    // B(q, t)  = q^n - (q-1) q^{n-t} - q
    std::int64_t b1 = 0;   // B1(q, t) = q^n - (q-1) q^{n-t} - 2
    Rational c;            // C(q, t)  = (q^{2n-2} - 1) / (q^{n-2} + 1)
    std::int64_t d = 0;    // D(q, t): the branch actually selected
    std::string d_rule;    // which branch produced d (diagnostic)
};

// Evaluates every bound for the triple (q, n, t) at subfield index n'.
// Branches: t > 1 (n' != 1 -> A; n' == 1 -> B when n even, else min(A, B));
// t == 1, n != 2 (n' > 2 -> A; n' == 2 -> floor(C); n' == 1 -> B1);
// t == 1, n == 2 -> q - 2.
BoundSet d_bound(std::uint64_t q, std::uint32_t n, std::uint32_t t,
                 std::uint32_t n_prime);

// Gamma(tau): the union of the cosets of g_0, ..., g_tau, sorted ascending.
// Requires tau < cs.min_reps.size().
std::vector<std::uint64_t> gamma_tau(const CosetSystem& cs, std::uint64_t tau);

// Subfield-subcode C \cap GF(q^{2n'})^m of an evaluation code over
// GF(q^{2n}), computed by expanding every big-field coordinate over the
// basis {1, g, ..., g^{n/n'-1}} of GF(q^{2n}) / GF(q^{2n'}) (g the field
// generator; independence verified) and solving the stacked kernel problem
// exactly.  The result's generator rows are subfield-valued (embedded
// big-field codes) and its alphabet is GF(q^{2n'}).  Requires n' | n.
EvalCode subfield_subcode(const EvalCode& code, std::uint32_t n_prime);

// The Gamma(tau) subfield-subcode: evaluates X^g at the roots for every
// g in Gamma(tau), takes the subfield-subcode over GF(q^{2n'}), and records
// the dual-distance bound g_{tau+1} + 1 (when tau + 1 is still a valid
// coset index).  Requires enumerated roots and tau < cs.min_reps.size().
EvalCode gamma_tau_code(const TraceDepPoly& poly, const CosetSystem& cs,
                        std::uint64_t tau);

// Independent dimension computation for cross-checking subfield_subcode:
// dim(C|_sub) = m - dim_sub(Tr(C^perp)) with the trace taken coordinatewise
// from GF(q^{2n}) onto GF(q^{2n'}) (Delsarte duality).
std::size_t delsarte_subcode_dim(const EvalCode& code, std::uint32_t n_prime);

}  // namespace tracecode

#endif  // TRACECODE_SUBFIELD_HPP
