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

#ifndef TRACECODE_TRACE_POLY_HPP
#define TRACECODE_TRACE_POLY_HPP

#include <cstdint>
#include <vector>

#include <json.hpp>

#include "tracecode/field.hpp"

namespace tracecode {

// One sparse monomial: coeff * X^exponent, coeff a nonzero element code.
struct TraceMonomial {
    std::uint64_t exponent = 0;
    std::uint32_t coeff = 0;
};

enum class TraceKind {
    kBth,      // the b-th trace-depending polynomial, b = q^t + 1
    kGeneral,  // a + tr(h(X)) for arbitrary sparse h
};

// A trace-depending polynomial over F_{q^{2n}}, kept as its minimal-degree
// representative modulo X^{q^{2n}-1} - 1: a sparse list of monomials with
// nonzero coefficients, exponents strictly ascending (exponent 0 carries the
// constant term when it is nonzero).
struct TraceDepPoly {
    FieldCtxPtr ctx;                    // the field F_{q^{2n}}
    TraceKind kind = TraceKind::kBth;
    std::uint64_t q = 0;                // prime power; F_q is the trace target
    std::uint32_t n = 0;                // half comes from F_{q^{2n}}
    std::uint32_t t = 0;                // b = q^t + 1 (kBth only, else 0)
    std::uint64_t b = 0;                // kBth only, else 0
    std::vector<TraceMonomial> support; // ascending exponents, coeffs != 0

    // True iff the constant term vanished so that 0 is a root; the zero
    // root is dropped from root_logs and counted separately.
    bool zero_dropped = false;

    // Discrete logs of the nonzero roots, ascending (filled by
    // enumerate_roots; empty before).
    std::vector<std::uint64_t> root_logs;

    // Largest exponent carried by the minimal representative.
    std::uint64_t degree() const;
    // Constant term (0 when exponent 0 is absent from the support).
    std::uint32_t constant() const;
    // Number of distinct roots in the field, the dropped zero included.
    std::size_t root_count() const { return root_logs.size() + (zero_dropped ? 1 : 0); }
    // Property (A): the polynomial splits with degree-many distinct nonzero
    // roots.  Meaningful only after enumerate_roots.
    bool property_a() const { return root_logs.size() == degree(); }

    // Value of the polynomial at the element with the given code.
    std::uint32_t evaluate(std::uint32_t x) const;
    // Root element codes in root_logs order.
    std::vector<std::uint32_t> root_codes() const;

    // {"p": characteristic, "m_degree": degree, "support": [[exp, coeff_log],
    // ...]} with coeff_log the discrete log of each coefficient (the
    // constant-term entry, exponent 0, uses its log as well).
    nlohmann::json to_json() const;
};

// Builds the b-th trace-depending polynomial for the triple (q, n, b) with
// b = q^t + 1: support from support_of_trb, every coefficient 1.  q may be
// any prime power under the field-order cap.  Throws std::invalid_argument
// on a malformed triple (t == 0 or t > n, q not a prime power).
TraceDepPoly build_trb(std::uint64_t q, std::uint32_t n, std::uint32_t t);

// Builds the minimal representative of a + tr(h(X)) over ctx, where the
// trace runs from ctx down to F_q and h is the given sparse polynomial with
// exponents in [1, q^{2n}-1).  ctx must be an extension of F_q of even
// relative degree 2n.  Conjugate monomials are accumulated at exponents
// d*q^j mod (q^{2n}-1) and cancelled terms removed.  Throws
// std::invalid_argument when h is empty, an exponent is out of range, a
// coefficient is zero, or ctx is incompatible with q.
TraceDepPoly build_general(const FieldCtxPtr& ctx, std::uint64_t q,
                           std::uint32_t a_code,
                           const std::vector<TraceMonomial>& h);

// Evaluates the polynomial at every nonzero field element by per-monomial
// rolling power ladders and records the roots' discrete logs ascending.
// A zero constant term marks zero_dropped instead of recording code 0.
void enumerate_roots(TraceDepPoly& poly);

}  // namespace tracecode

#endif  // TRACECODE_TRACE_POLY_HPP
