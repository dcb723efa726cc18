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

#ifndef TRACECODE_FIELD_HPP
#define TRACECODE_FIELD_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace tracecode {

// ===========================================================================
// Modulus catalogue
// ===========================================================================

// A compiled-in primitive polynomial for GF(p^m).  Coefficients are stored
// low-degree first and include the leading 1, so coeffs.size() == m + 1.
struct ModulusEntry {
    std::uint32_t p = 0;
    std::uint32_t m = 0;
    std::vector<std::uint32_t> coeffs;
};

// The compiled-in table of norm-compatible primitive polynomials (Conway
// polynomials), merged with any entries loaded from the directory named by
// the TRACECODE_CONWAY_DIR environment variable.  Entries from the
// environment take precedence over compiled-in ones.  The external file is
// named conway.txt and holds one polynomial per line as
// "p m c0 c1 ... cm" (low-degree first, leading coefficient 1).
const std::vector<ModulusEntry>& modulus_table();

// Looks up a modulus for GF(p^m).  Returns std::nullopt when neither the
// compiled-in table nor the environment override covers the pair.
std::optional<ModulusEntry> find_modulus(std::uint32_t p, std::uint32_t m);

// ===========================================================================
// Field context
// ===========================================================================

class FieldCtx;
using FieldCtxPtr = std::shared_ptr<const FieldCtx>;

// Exact arithmetic context for GF(p^m).
//
// Elements are handled as raw codes: the code of the element with
// coordinates (c_0, ..., c_{m-1}) over GF(p) in the power basis
// {1, x, ..., x^{m-1}} is sum c_i * p^i.  Zero is code 0 and one is code 1.
// The class of x is a primitive element (the moduli in the table guarantee
// this; it is verified during construction) and is exposed as generator().
//
// Contexts are immutable and shared; every element-producing call documents
// which context its inputs must belong to.  The Fq wrapper below tags
// elements with their context and rejects cross-context arithmetic.
class FieldCtx : public std::enable_shared_from_this<FieldCtx> {
public:
    // Hard cap on the field order p^m.
    static constexpr std::uint64_t kOrderCap = std::uint64_t{1} << 26;
    // Fields up to this order get exp/log/Zech tables (O(1) arithmetic);
    // larger fields fall back to polynomial-basis arithmetic.
    static constexpr std::uint64_t kTableCap = std::uint64_t{1} << 22;

    // Builds the context for GF(p^m).  Throws std::invalid_argument when p
    // is not prime, m == 0, or p^m exceeds kOrderCap, and std::runtime_error
    // when no table entry covers (p, m) and the deterministic fallback
    // search fails.
    static FieldCtxPtr create(std::uint32_t p, std::uint32_t m);

    FieldCtx(const FieldCtx&) = delete;
    FieldCtx& operator=(const FieldCtx&) = delete;

    // --- identity -----------------------------------------------------

    std::uint32_t characteristic() const { return p_; }
    std::uint32_t degree() const { return m_; }          // over GF(p)
    std::uint64_t order() const { return q_; }           // p^m
    std::uint64_t group_order() const { return n_; }     // p^m - 1
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }
    bool modulus_from_table() const { return modulus_from_table_; }
    bool has_tables() const { return has_tables_; }
    // Distinct per context; lets element wrappers detect context mixing.
    std::uint64_t ctx_id() const { return ctx_id_; }
    std::string name() const;                            // "GF(p^m)"

    // --- element codecs -----------------------------------------------

    // Code of the element with the given power-basis coordinates
    // (low-degree first; missing trailing coordinates are zero).
    std::uint32_t from_coeffs(const std::vector<std::uint32_t>& coeffs) const;
    std::vector<std::uint32_t> coeffs_of(std::uint32_t a) const;
    // Embeds the integer c (mod p) into the prime subfield.
    std::uint32_t from_int(std::uint64_t c) const;
    // Code of the primitive element g (the class of x when m > 1).
    std::uint32_t generator() const { return gen_; }

    // --- arithmetic on raw codes ----------------------------------------

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg(std::uint32_t a) const;
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv(std::uint32_t a) const;             // a != 0
    std::uint32_t div(std::uint32_t a, std::uint32_t b) const;  // b != 0
    // a^e with e >= 0; pow(0, 0) == 1.
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
    // g^e (e reduced mod group_order()).
    std::uint32_t gpow(std::uint64_t e) const;
    // Discrete log base g of a != 0; requires has_tables().
    std::uint64_t log(std::uint32_t a) const;
    // Schoolbook polynomial-basis product; independent of the log tables.
    std::uint32_t mul_poly_basis(std::uint32_t a, std::uint32_t b) const;
    // Zech logarithm: the value z with g^z == 1 + g^i, or group_order() as
    // a sentinel when 1 + g^i == 0.  Requires has_tables().
    std::uint64_t zech_log(std::uint64_t i) const;

    // --- field structure -------------------------------------------------

    // a^(p^e).
    std::uint32_t frobenius(std::uint32_t a, std::uint64_t e) const;
    // Trace from the subfield GF(p^from) into GF(p^to): sum of a^(p^(to*i))
    // for 0 <= i < from/to.  Requires to | from, from | m, and a to lie in
    // GF(p^from) (validated).
    std::uint32_t trace_map(std::uint32_t a, std::uint32_t from_pdeg,
                            std::uint32_t to_pdeg) const;
    // All elements of the subfield GF(p^sub_pdeg) (requires sub_pdeg | m):
    // zero first, then by ascending discrete log.  Requires has_tables().
    std::vector<std::uint32_t> subfield_members(std::uint32_t sub_pdeg) const;
    // True when a^(p^sub_pdeg) == a, i.e. a lies in GF(p^sub_pdeg).
    bool in_subfield(std::uint32_t a, std::uint32_t sub_pdeg) const;

private:
    FieldCtx() = default;
    void build_tables();
    std::uint32_t mul_by_x(std::uint32_t a) const;

    std::uint32_t p_ = 0, m_ = 0;
    std::uint64_t q_ = 0, n_ = 0;
    std::uint64_t ctx_id_ = 0;
    std::vector<std::uint32_t> modulus_;
    bool modulus_from_table_ = false;
    bool has_tables_ = false;
    std::uint32_t gen_ = 0;

    // Table arithmetic (has_tables_ only).
    std::vector<std::uint32_t> exp_;   // size 2n: exp_[i] = code of g^(i mod n)
    std::vector<std::uint32_t> log_;   // size q: log_[code] (log_[0] unused)
    std::vector<std::uint32_t> zech_;  // size n: zech_log, n_ as sentinel
    // Digitwise addition of packed codes, split in half to bound memory:
    // a code v splits as v = hi * qlo_ + lo with lo < qlo_.
    std::uint32_t qlo_ = 0, qhi_ = 0;
    std::vector<std::uint32_t> add_lo_;  // qlo_^2 entries
    std::vector<std::uint32_t> add_hi_;  // qhi_^2 entries, pre-scaled by qlo_
};

// ===========================================================================
// Tagged element wrapper
// ===========================================================================

// Value-semantic element of a specific FieldCtx.  Operations on elements of
// different contexts throw std::invalid_argument.  Hot loops should prefer
// raw codes via FieldCtx; Fq is the safe boundary type.
class Fq {
public:
    Fq() = default;                  // detached zero; usable only for copies
    Fq(FieldCtxPtr ctx, std::uint32_t code);

    const FieldCtxPtr& ctx() const { return ctx_; }
    std::uint32_t code() const { return code_; }
    bool is_zero() const { return code_ == 0; }

    friend Fq operator+(const Fq& a, const Fq& b);
    friend Fq operator-(const Fq& a, const Fq& b);
    friend Fq operator*(const Fq& a, const Fq& b);
    friend Fq operator/(const Fq& a, const Fq& b);
    Fq operator-() const;
    Fq pow(std::uint64_t e) const;
    friend bool operator==(const Fq& a, const Fq& b);
    friend bool operator!=(const Fq& a, const Fq& b);

private:
    static const FieldCtx& common_ctx(const Fq& a, const Fq& b);
    FieldCtxPtr ctx_;
    std::uint32_t code_ = 0;
};

// ===========================================================================
// Small integer helpers shared across modules
// ===========================================================================

bool is_prime_u32(std::uint32_t v);
// p^e with overflow check against limit; throws std::overflow_error.
std::uint64_t checked_pow_u64(std::uint64_t base, std::uint32_t exp,
                              std::uint64_t limit);
// Splits a prime power q = p^e; throws std::invalid_argument otherwise.
void factor_prime_power(std::uint64_t q, std::uint32_t& p, std::uint32_t& e);

}  // namespace tracecode

#endif  // TRACECODE_FIELD_HPP
