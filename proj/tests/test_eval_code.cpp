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

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "tracecode/eval_code.hpp"
#include "tracecode/power_sums.hpp"
#include "tracecode/trace_poly.hpp"

namespace tc = tracecode;

namespace {

tc::TraceDepPoly rooted(std::uint64_t q, std::uint32_t n, std::uint32_t t) {
    tc::TraceDepPoly poly = tc::build_trb(q, n, t);
    tc::enumerate_roots(poly);
    return poly;
}

std::vector<std::uint32_t> row_vec(const tc::Matrix& m, std::size_t r) {
    const std::uint32_t* p = m.row(r);
    return std::vector<std::uint32_t>(p, p + m.cols());
}

}  // namespace

TEST_CASE("a_bound pins across all five branches") {
    CHECK(tc::a_bound(2, 2, 1) == 1);
    CHECK(tc::a_bound(2, 2, 2) == 0);
    CHECK(tc::a_bound(2, 4, 2) == 12);
    CHECK(tc::a_bound(2, 4, 3) == 10);
    CHECK(tc::a_bound(2, 6, 3) == 58);
    CHECK(tc::a_bound(2, 6, 5) == 46);
    CHECK(tc::a_bound(3, 2, 1) == 3);
    CHECK(tc::a_bound(3, 2, 2) == 1);
    CHECK(tc::a_bound(3, 4, 2) == 49);
    CHECK(tc::a_bound(3, 4, 3) == 43);
    CHECK(tc::a_bound(5, 2, 1) == 11);
    CHECK(tc::a_bound(5, 2, 2) == 3);
    CHECK(tc::a_bound(7, 2, 1) == 23);
    CHECK(tc::a_bound(7, 2, 2) == 5);
    CHECK(tc::a_bound(11, 2, 1) == 59);
    CHECK_THROWS_AS(tc::a_bound(2, 2, 0), std::invalid_argument);
    CHECK_THROWS_AS(tc::a_bound(2, 2, 3), std::invalid_argument);
}

TEST_CASE("delta_tau enumerates 0..tau") {
    CHECK(tc::delta_tau(0) == std::vector<std::uint64_t>{0});
    CHECK(tc::delta_tau(3) == std::vector<std::uint64_t>{0, 1, 2, 3});
}

TEST_CASE("evaluation code construction") {
    const tc::TraceDepPoly poly = rooted(2, 2, 1);
    const tc::EvalCode code = tc::build_eval_code(poly, tc::delta_tau(1));
    CHECK(code.length == 12);
    CHECK(code.dim == 2);
    CHECK(code.alphabet_pdeg == 4);
    CHECK(code.alphabet_order() == 16);
    CHECK_FALSE(code.dual_distance_bound.has_value());
    CHECK(code.gen.rows() == 2);
    CHECK(code.gen.cols() == 12);
    // Row 0 evaluates X^0, row 1 evaluates X at each enumerated root.
    const tc::FieldCtx& f = *poly.ctx;
    for (std::size_t c = 0; c < 12; ++c) {
        CHECK(code.gen.at(0, c) == f.from_int(1));
        CHECK(code.gen.at(1, c) == f.gpow(poly.root_logs[c]));
    }
    CHECK(code.provenance.at("construction") == "evaluation");
}

TEST_CASE("exponents reduce mod the group order") {
    const tc::TraceDepPoly poly = rooted(2, 2, 1);
    // 16 = 1 mod 15, so the set keeps three members but the rank stays 2.
    const tc::EvalCode code =
        tc::build_eval_code(poly, std::vector<std::uint64_t>{16, 0, 1});
    CHECK(code.delta == std::vector<std::uint64_t>{0, 1, 16});
    CHECK(code.gen.rows() == 3);
    CHECK(code.dim == 2);

    SUBCASE("distance certification on this generator") {
        // 2-subsets of distinct evaluation points are independent.
        const tc::DistanceCertificate ok = tc::certify_dual_distance(code, 3);
        CHECK(ok.status == tc::DistanceStatus::kCertified);
        CHECK(ok.exhaustive);
        CHECK(ok.subsets_checked == 66);  // C(12, 2)
        // 3 columns of an effectively rank-2 generator are dependent.
        const tc::DistanceCertificate bad = tc::certify_dual_distance(code, 4);
        CHECK(bad.status == tc::DistanceStatus::kRefuted);
        CHECK(bad.witness_columns.size() == 3);
    }
}

TEST_CASE("build_eval_code input validation") {
    tc::TraceDepPoly poly = tc::build_trb(2, 2, 1);
    CHECK_THROWS_AS(tc::build_eval_code(poly, tc::delta_tau(1)),
                    std::invalid_argument);  // roots not enumerated
    tc::enumerate_roots(poly);
    CHECK_THROWS_AS(tc::build_eval_code(poly, {}), std::invalid_argument);

    // A dropped zero root disqualifies the polynomial as a point set.
    const tc::FieldCtxPtr ctx = tc::FieldCtx::create(3, 4);
    tc::TraceDepPoly dropped = tc::build_general(
        ctx, 3, /*a_code=*/0, {{1, ctx->from_int(1)}});
    tc::enumerate_roots(dropped);
    REQUIRE(dropped.zero_dropped);
    CHECK_THROWS_AS(tc::build_eval_code(dropped, tc::delta_tau(1)),
                    std::invalid_argument);
}

TEST_CASE("hermitian product") {
    const tc::FieldCtxPtr ctx = tc::FieldCtx::create(2, 4);
    const tc::FieldCtx& f = *ctx;
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::uint32_t> dist(0, 15);

    for (int trial = 0; trial < 50; ++trial) {
        std::vector<std::uint32_t> x(6), y(6), z(6);
        for (std::size_t i = 0; i < 6; ++i) {
            x[i] = dist(rng);
            y[i] = dist(rng);
            z[i] = dist(rng);
        }
        // Definition check against a direct loop.
        std::uint32_t manual = 0;
        for (std::size_t i = 0; i < 6; ++i) {
            manual = f.add(manual, f.mul(x[i], f.pow(y[i], 4)));
        }
        CHECK(tc::hermitian_product(f, x, y, 4) == manual);
        // conj_power = 1 degenerates to the Euclidean product.
        std::uint32_t euclid = 0;
        for (std::size_t i = 0; i < 6; ++i) {
            euclid = f.add(euclid, f.mul(x[i], y[i]));
        }
        CHECK(tc::hermitian_product(f, x, y, 1) == euclid);
        // Additivity in the left argument.
        std::vector<std::uint32_t> xz(6);
        for (std::size_t i = 0; i < 6; ++i) xz[i] = f.add(x[i], z[i]);
        CHECK(tc::hermitian_product(f, xz, y, 4) ==
              f.add(tc::hermitian_product(f, x, y, 4),
                    tc::hermitian_product(f, z, y, 4)));
        // Conjugate symmetry: h(x, y)^4 = h(y, x) over GF(16).
        CHECK(f.pow(tc::hermitian_product(f, x, y, 4), 4) ==
              tc::hermitian_product(f, y, x, 4));
    }
    CHECK_THROWS_AS(
        tc::hermitian_product(f, std::vector<std::uint32_t>{1},
                              std::vector<std::uint32_t>{1, 2}, 4),
        std::invalid_argument);
}

TEST_CASE("Gram entries are power sums at twisted indices") {
    const tc::TraceDepPoly poly = rooted(3, 2, 1);
    const tc::FieldCtx& f = *poly.ctx;
    const std::uint64_t qn = 9;  // q^n
    const std::uint64_t N = f.group_order();
    const tc::EvalCode code = tc::build_eval_code(poly, tc::delta_tau(5));
    for (std::size_t a = 0; a < code.gen.rows(); ++a) {
        for (std::size_t b = 0; b < code.gen.rows(); ++b) {
            const std::uint32_t gram = tc::hermitian_product(
                f, row_vec(code.gen, a), row_vec(code.gen, b), qn);
            std::uint64_t idx = code.delta[a] + qn * code.delta[b];
            if (idx == 0) idx = N;  // sum of x^0 over the roots
            CHECK(gram == tc::power_sum_at(poly, idx));
        }
    }
}

TEST_CASE("self-orthogonality inside and outside the tau cap") {
    const tc::TraceDepPoly poly = rooted(2, 2, 1);

    SUBCASE("Delta(1) is Hermitian self-orthogonal") {
        const tc::EvalCode code = tc::build_eval_code(poly, tc::delta_tau(1));
        const tc::SOCertificate cert = tc::check_self_orthogonal(code, 4);
        CHECK(cert.gram_zero);
        CHECK(cert.conj_power == 4);
    }
    SUBCASE("Delta(2) fails with a concrete witness") {
        const tc::EvalCode code = tc::build_eval_code(poly, tc::delta_tau(2));
        const tc::SOCertificate cert = tc::check_self_orthogonal(code, 4);
        CHECK_FALSE(cert.gram_zero);
        CHECK(cert.witness_i == 1);
        CHECK(cert.witness_j == 2);
        CHECK(cert.witness_value == poly.ctx->from_int(1));
    }
}

TEST_CASE("dimension and self-orthogonality up to the cap") {
    const tc::TraceDepPoly poly = rooted(5, 2, 1);
    const std::uint64_t cap = tc::a_bound(5, 2, 1);
    REQUIRE(cap == 11);
    std::size_t prev_dim = 0;
    for (std::uint64_t tau = 0; tau <= cap; ++tau) {
        CAPTURE(tau);
        const tc::EvalCode code = tc::build_eval_code(poly, tc::delta_tau(tau));
        CHECK(code.dim == tau + 1);
        CHECK(code.dim >= prev_dim);  // nested sets give nested codes
        prev_dim = code.dim;
        CHECK(tc::check_self_orthogonal(code, 25).gram_zero);
    }
}

TEST_CASE("sampled-only certification on a long code") {
    // C(150, 4) far exceeds a tiny budget, forcing the sampling path.
    const tc::TraceDepPoly poly = rooted(5, 2, 1);
    const tc::EvalCode code = tc::build_eval_code(poly, tc::delta_tau(3));
    const tc::DistanceCertificate cert =
        tc::certify_dual_distance(code, 5, /*budget=*/1000, /*trials=*/32);
    CHECK(cert.status == tc::DistanceStatus::kSampledOnly);
    CHECK_FALSE(cert.exhaustive);
    CHECK(cert.subsets_checked == 32);
    CHECK_THROWS_AS(tc::certify_dual_distance(code, 1), std::invalid_argument);
}

TEST_CASE("true minimum distance by full enumeration") {
    SUBCASE("[12,2] over GF(16)") {
        const tc::TraceDepPoly poly = rooted(2, 2, 1);
        const tc::EvalCode code = tc::build_eval_code(poly, tc::delta_tau(1));
        CHECK(tc::true_min_distance(code) == 11);
    }
    SUBCASE("[36,3] over GF(81)") {
        const tc::TraceDepPoly poly = rooted(3, 2, 1);
        const tc::EvalCode code = tc::build_eval_code(poly, tc::delta_tau(2));
        CHECK(tc::true_min_distance(code) == 34);
        CHECK_THROWS_AS(tc::true_min_distance(code, /*cap=*/100),
                        std::invalid_argument);
    }
    SUBCASE("zero-dimensional codes are rejected") {
        tc::EvalCode empty;
        empty.ctx = tc::FieldCtx::create(2, 4);
        CHECK_THROWS_AS(tc::true_min_distance(empty), std::invalid_argument);
    }
}
