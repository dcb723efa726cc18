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

#include "tracecode/trace_poly.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "tracecode/qadic.hpp"

namespace tracecode {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t mod) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a) * b) % mod);
}

}  // namespace

std::uint64_t TraceDepPoly::degree() const {
    return support.empty() ? 0 : support.back().exponent;
}

std::uint32_t TraceDepPoly::constant() const {
    return (!support.empty() && support.front().exponent == 0)
               ? support.front().coeff
               : 0;
}

std::uint32_t TraceDepPoly::evaluate(std::uint32_t x) const {
    const FieldCtx& f = *ctx;
    std::uint32_t acc = 0;
    for (const TraceMonomial& mono : support) {
        acc = f.add(acc, f.mul(mono.coeff, f.pow(x, mono.exponent)));
    }
    return acc;
}

std::vector<std::uint32_t> TraceDepPoly::root_codes() const {
    std::vector<std::uint32_t> out;
    out.reserve(root_logs.size());
    for (std::uint64_t lg : root_logs) out.push_back(ctx->gpow(lg));
    return out;
}

nlohmann::json TraceDepPoly::to_json() const {
    nlohmann::json sup = nlohmann::json::array();
    for (const TraceMonomial& mono : support) {
        sup.push_back({mono.exponent, ctx->log(mono.coeff)});
    }
    return nlohmann::json{{"p", ctx->characteristic()},
                          {"m_degree", degree()},
                          {"support", std::move(sup)}};
}

TraceDepPoly build_trb(std::uint64_t q, std::uint32_t n, std::uint32_t t) {
    std::uint32_t p = 0, e = 0;
    factor_prime_power(q, p, e);

    TraceDepPoly poly;
    poly.ctx = FieldCtx::create(p, 2 * n * e);
    poly.kind = TraceKind::kBth;
    poly.q = q;
    poly.n = n;
    poly.t = t;
    poly.b = checked_pow_u64(q, t, poly.ctx->group_order()) + 1;
    for (std::uint64_t exponent : support_of_trb(q, n, t)) {
        poly.support.push_back({exponent, 1});
    }
    return poly;
}

TraceDepPoly build_general(const FieldCtxPtr& ctx, std::uint64_t q,
                           std::uint32_t a_code,
                           const std::vector<TraceMonomial>& h) {
    if (!ctx) throw std::invalid_argument("build_general: null field context");
    if (h.empty()) throw std::invalid_argument("build_general: h must be nonzero");

    std::uint32_t p = 0, e = 0;
    factor_prime_power(q, p, e);
    if (p != ctx->characteristic() || ctx->degree() % (2 * e) != 0) {
        throw std::invalid_argument("build_general: ctx is not an even-degree extension of F_q");
    }
    const std::uint32_t two_n = ctx->degree() / e;
    const std::uint64_t N = ctx->group_order();
    const FieldCtx& f = *ctx;

    // Accumulate the Frobenius orbit of every monomial: c * X^d contributes
    // c^{q^j} X^{d q^j mod N} for 0 <= j < 2n.
    std::map<std::uint64_t, std::uint32_t> acc;
    for (const TraceMonomial& mono : h) {
        if (mono.exponent == 0 || mono.exponent >= N) {
            throw std::invalid_argument("build_general: exponent out of [1, q^{2n}-1)");
        }
        if (mono.coeff == 0 || mono.coeff >= f.order()) {
            throw std::invalid_argument("build_general: invalid coefficient");
        }
        std::uint64_t exp = mono.exponent;
        std::uint32_t coeff = mono.coeff;
        for (std::uint32_t j = 0; j < two_n; ++j) {
            auto [it, inserted] = acc.emplace(exp, coeff);
            if (!inserted) it->second = f.add(it->second, coeff);
            exp = mulmod_u64(exp, q, N);       // nonzero: gcd(q, N) = 1
            coeff = f.frobenius(coeff, e);      // c -> c^q
        }
    }
    if (a_code >= f.order()) {
        throw std::invalid_argument("build_general: invalid constant");
    }
    if (a_code != 0) acc[0] = a_code;

    TraceDepPoly poly;
    poly.ctx = ctx;
    poly.kind = TraceKind::kGeneral;
    poly.q = q;
    poly.n = two_n / 2;
    poly.zero_dropped = (a_code == 0);
    for (const auto& [exponent, coeff] : acc) {
        if (coeff != 0) poly.support.push_back({exponent, coeff});
    }
    return poly;
}

void enumerate_roots(TraceDepPoly& poly) {
    if (!poly.ctx) throw std::invalid_argument("enumerate_roots: unbound polynomial");
    const FieldCtx& f = *poly.ctx;
    const std::uint64_t N = f.group_order();
    const std::size_t k = poly.support.size();

    poly.root_logs.clear();
    if (k == 0) {
        // Zero polynomial: every point is a root; reject as malformed.
        throw std::invalid_argument("enumerate_roots: empty polynomial");
    }

    // Rolling ladders: val[i] = coeff_i * (g^s)^{e_i} at step s, advanced by
    // one multiplication with g^{e_i} per step.
    std::vector<std::uint32_t> val(k), step(k);
    for (std::size_t i = 0; i < k; ++i) {
        val[i] = poly.support[i].coeff;
        step[i] = f.gpow(poly.support[i].exponent);
    }
    for (std::uint64_t s = 0; s < N; ++s) {
        std::uint32_t sum = 0;
        for (std::size_t i = 0; i < k; ++i) sum = f.add(sum, val[i]);
        if (sum == 0) poly.root_logs.push_back(s);
        for (std::size_t i = 0; i < k; ++i) val[i] = f.mul(val[i], step[i]);
    }
}

}  // namespace tracecode
