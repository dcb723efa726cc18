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

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include <doctest.h>
#include <json.hpp>

#include "tracecode/trace_poly.hpp"

namespace tc = tracecode;

namespace {

// Zeros of poly over the whole field, found by direct evaluation.
std::size_t brute_zero_count(const tc::TraceDepPoly& poly) {
    std::size_t zeros = 0;
    for (std::uint64_t x = 0; x < poly.ctx->order(); ++x) {
        if (poly.evaluate(static_cast<std::uint32_t>(x)) == 0) ++zeros;
    }
    return zeros;
}

}  // namespace

TEST_CASE("the smallest b-th polynomial is 1 + X^3 + X^6 + X^9 + X^12") {
    tc::TraceDepPoly poly = tc::build_trb(2, 2, 1);
    CHECK(poly.q == 2);
    CHECK(poly.n == 2);
    CHECK(poly.t == 1);
    CHECK(poly.b == 3);
    REQUIRE(poly.support.size() == 5);
    const std::vector<std::uint64_t> exps = {0, 3, 6, 9, 12};
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(poly.support[i].exponent == exps[i]);
        CHECK(poly.support[i].coeff == 1);
    }
    CHECK(poly.degree() == 12);
    CHECK(poly.constant() == 1);
    CHECK_FALSE(poly.zero_dropped);

    tc::enumerate_roots(poly);
    CHECK(poly.root_logs.size() == 12);
    CHECK(poly.root_count() == 12);
    CHECK(poly.property_a());
    CHECK(std::is_sorted(poly.root_logs.begin(), poly.root_logs.end()));
    for (const std::uint32_t root : poly.root_codes()) {
        CHECK(poly.evaluate(root) == 0);
    }
}

TEST_CASE("root enumeration matches brute-force evaluation") {
    tc::TraceDepPoly poly = tc::build_trb(3, 2, 1);
    tc::enumerate_roots(poly);
    CHECK(poly.root_count() == 36);
    CHECK(poly.property_a());
    CHECK(brute_zero_count(poly) == 36);  // zero is not a root (constant 1)
    CHECK(poly.evaluate(0) == poly.constant());
}

TEST_CASE("prime-power base field q = 4") {
    // (q, n, t) = (4, 1, 1): b = 5, the polynomial is 1 + X^5 over GF(16)
    // and its roots are the 5th roots of unity.
    tc::TraceDepPoly poly = tc::build_trb(4, 1, 1);
    CHECK(poly.ctx->order() == 16);
    CHECK(poly.b == 5);
    CHECK(poly.degree() == 5);
    tc::enumerate_roots(poly);
    CHECK(poly.root_count() == 5);
    CHECK(poly.property_a());
}

TEST_CASE("general polynomials: trace kernel of X") {
    // a + tr(X) over GF(81) down to F_3: for a = 0 the zeros form the trace
    // kernel, which has q^{2n-1} = 27 elements (zero included).
    const tc::FieldCtxPtr ctx = tc::FieldCtx::create(3, 4);

    SUBCASE("a = 0 drops the zero root") {
        tc::TraceDepPoly poly = tc::build_general(ctx, 3, 0, {{1, 1}});
        CHECK(poly.kind == tc::TraceKind::kGeneral);
        CHECK(poly.zero_dropped);
        CHECK(poly.constant() == 0);
        tc::enumerate_roots(poly);
        CHECK(poly.root_count() == 27);
        CHECK(poly.root_logs.size() == 26);
        CHECK(brute_zero_count(poly) == 27);
    }

    SUBCASE("a = 1 shifts to a coset of the kernel") {
        tc::TraceDepPoly poly = tc::build_general(ctx, 3, 1, {{1, 1}});
        CHECK_FALSE(poly.zero_dropped);
        tc::enumerate_roots(poly);
        CHECK(poly.root_count() == 27);
        CHECK(brute_zero_count(poly) == 27);
    }
}

TEST_CASE("general polynomials: conjugate monomials cancel") {
    // Over GF(16) with q = 2, the orbits of X and X^2 coincide, so
    // tr(X) + tr(X^2) = 0 and 1 + tr(X + X^2) collapses to the constant 1.
    const tc::FieldCtxPtr ctx = tc::FieldCtx::create(2, 4);
    tc::TraceDepPoly poly =
        tc::build_general(ctx, 2, 1, {{1, 1}, {2, 1}});
    REQUIRE(poly.support.size() == 1);
    CHECK(poly.support[0].exponent == 0);
    CHECK(poly.degree() == 0);
    tc::enumerate_roots(poly);
    CHECK(poly.root_count() == 0);
    for (std::uint32_t x = 0; x < 16; ++x) CHECK(poly.evaluate(x) == 1);
}

TEST_CASE("general polynomial equals its defining trace expression") {
    // 1 + tr(g^5 X^3) over GF(256) down to F_2, evaluated both ways.
    const tc::FieldCtxPtr ctx = tc::FieldCtx::create(2, 8);
    const std::uint32_t c = ctx->gpow(5);
    tc::TraceDepPoly poly = tc::build_general(ctx, 2, 1, {{3, c}});
    for (std::uint64_t x = 0; x < 256; ++x) {
        const auto xc = static_cast<std::uint32_t>(x);
        const std::uint32_t inner = ctx->mul(c, ctx->pow(xc, 3));
        const std::uint32_t expect = ctx->add(1, ctx->trace_map(inner, 8, 1));
        CHECK(poly.evaluate(xc) == expect);
    }
}

TEST_CASE("build guards") {
    CHECK_THROWS_AS(tc::build_trb(2, 2, 0), std::invalid_argument);
    CHECK_THROWS_AS(tc::build_trb(2, 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(tc::build_trb(6, 2, 1), std::invalid_argument);

    const tc::FieldCtxPtr ctx = tc::FieldCtx::create(2, 4);
    CHECK_THROWS_AS(tc::build_general(ctx, 2, 1, {}), std::invalid_argument);
    CHECK_THROWS_AS(tc::build_general(ctx, 2, 1, {{0, 1}}),
                    std::invalid_argument);  // exponent 0 reserved
    CHECK_THROWS_AS(tc::build_general(ctx, 2, 1, {{1, 0}}),
                    std::invalid_argument);  // zero coefficient
    CHECK_THROWS_AS(tc::build_general(ctx, 3, 1, {{1, 1}}),
                    std::invalid_argument);  // wrong characteristic
    const tc::FieldCtxPtr odd = tc::FieldCtx::create(2, 6);
    CHECK_THROWS_AS(tc::build_general(odd, 4, 1, {{1, 1}}),
                    std::invalid_argument);  // 6 not even over F_4's degree 2
}

TEST_CASE("JSON serialization shape") {
    tc::TraceDepPoly poly = tc::build_trb(2, 2, 1);
    const nlohmann::json j = poly.to_json();
    CHECK(j.at("p") == 2);
    CHECK(j.at("m_degree") == 12);
    const auto& support = j.at("support");
    REQUIRE(support.size() == 5);
    for (std::size_t i = 0; i < support.size(); ++i) {
        REQUIRE(support[i].size() == 2);
        CHECK(support[i][1] == 0);  // every coefficient is 1 = g^0
    }
    CHECK(support[0][0] == 0);
    CHECK(support[4][0] == 12);
}
