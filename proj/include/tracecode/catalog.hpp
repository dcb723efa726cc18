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

#ifndef TRACECODE_CATALOG_HPP
#define TRACECODE_CATALOG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tracecode/trace_poly.hpp"

namespace tracecode {

// ===========================================================================
// Built-in construction catalogue
// ===========================================================================

// One verified Property (A) triple of the bundled reference table, with the
// expected polynomial degree m.
struct Table1Row {
    std::uint64_t q = 0;
    std::uint32_t n = 0, t = 0;
    std::uint64_t b = 0;  // q^t + 1
    std::uint64_t m = 0;  // expected degree / root count
    bool heavy = false;   // enumeration noticeably slower than the rest
};

// The 13 verified triples, in reference order.  The first row (2,2,1) is
// the exceptional triple excluded from the Delta(tau) theorem.
const std::vector<Table1Row>& table1_rows();

// One quantum-code family from the construction pipeline: a triple, a
// subfield selection (n_prime == 0 means the full evaluation field), an
// expansion degree r, and an inclusive tau range.
struct FamilySpec {
    std::string name;        // e.g. "len640"
    std::uint64_t q = 0;
    std::uint32_t n = 0, t = 0;
    std::uint32_t n_prime = 0;  // 0: full-field Delta(tau) codes
    std::uint32_t r = 0;        // base-field expansion degree
    std::uint64_t tau_min = 0, tau_max = 0;
    std::string golden_csv;  // file under the golden data dir
};

// The eight bundled families (lengths 640, 320, 576, 288, 300, 130, 784, 350).
const std::vector<FamilySpec>& family_specs();

// One general trace-depending polynomial of the sporadic suite over
// GF(2^8): constant 1 and monomials c * X^e with c = g^coeff_gpow for the
// field generator g.
struct SporadicPoly {
    std::string name;  // e.g. "1+tr(a^5X^3)"
    struct Monomial {
        std::uint64_t coeff_gpow = 0;  // coefficient as a power of a
        std::uint64_t exponent = 0;
    };
    std::vector<Monomial> monomials;
    std::uint64_t claimed_m = 0;  // root count stated by the reference table
};

// The six distinct sporadic polynomials, reference order.
const std::vector<SporadicPoly>& sporadic_polys();

// One sporadic construction row: polynomial name, the claimed root count,
// the coset index u of Gamma(u) over GF(16), and the claimed binary
// parameters [[n, k, >= d]]_2.
struct Table8Row {
    std::uint32_t row = 0;
    std::string poly;
    std::uint64_t claimed_m = 0;
    std::uint64_t u = 0;
    std::uint64_t n = 0, k = 0, d = 0;
};

// ===========================================================================
// Golden-table loading
// ===========================================================================

// A quantum-parameter row of a golden CSV (n, k, d, q).
struct GoldenQuantumRow {
    std::uint64_t n = 0, k = 0, d = 0, q = 0;
    std::string note;  // optional trailing column
};

// Resolves the golden data directory: `override_dir` when nonempty, else
// $TRACECODE_DATA_DIR, else "data/golden" relative to the working
// directory.  Throws std::runtime_error when the directory has no
// table1.csv.
std::string resolve_data_dir(const std::string& override_dir);

std::vector<Table1Row> load_table1_csv(const std::string& path);
std::vector<GoldenQuantumRow> load_quantum_csv(const std::string& path);
std::vector<Table8Row> load_table8_csv(const std::string& path);

}  // namespace tracecode

#endif  // TRACECODE_CATALOG_HPP
